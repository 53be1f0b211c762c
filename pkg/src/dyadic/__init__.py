"""Exact workbench for dyadic subbases, bottomed sequences and their compact posets."""
from .errors import (BudgetExceeded, DyadicError, EmptyBase, IncompatibleOperands,
                     IncompatibleSet, IndexBeyondSubbase, NonTotalInput, NotInSpace, OutOfRange,
                     SchemaError, UnsaturatedRegion, WordSyntaxError, WrongSpace)
from .region import AbstractPoint, Interval, Point, Region, SpaceDef, interval, pt
from .subbase import DyadicSubbase, encode, region_S, region_Sbar, region_Sbarex, region_Sex, validate
from .tword import TStream, compatible, fill, join, leq, parse, restrict

__version__ = "0.1.0"
