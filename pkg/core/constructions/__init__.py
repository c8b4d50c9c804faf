from .base import ConstructionError, NamedConstruction
from .registry import CONSTRUCTIONS, get_construction, list_constructions, parse_reference

__all__ = [
    "CONSTRUCTIONS",
    "ConstructionError",
    "NamedConstruction",
    "get_construction",
    "list_constructions",
    "parse_reference",
]
