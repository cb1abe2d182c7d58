"""Weighted Dyck path characteristic functions and the Inv/Quinv identities."""

from ._core import BACKEND
from .algebra import LaurentQT
from .dyck import DyckPath, parse_path
from .partition import parse_partition

__all__ = ["BACKEND", "DyckPath", "LaurentQT", "parse_partition", "parse_path"]
__version__ = "0.1.0"
