"""Exact q-expansions of elliptic genera across phases of gauged linear sigma models."""
from .cyclo import CycloNum, root_of_unity
from .pseries import PuiseuxSeries, series_equal

__version__ = "0.1.0"
