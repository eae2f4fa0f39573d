"""Loaders for the bundled real-world signed networks (see MANIFEST.md)."""

from importlib import resources

from ..graph import SignedGraph
from ..io import parse_edge_list

SUPREME_COURT_COMMUNITIES = ({"1", "2", "3", "4"}, {"5", "6", "7", "8", "9"})
SLOVENE_COMMUNITIES = ({"1", "3", "6", "8", "9"}, {"2", "4", "5", "7", "10"})
GAHUKU_GAMA_COMMUNITIES = (
    {"3", "4", "6", "7", "8", "11", "12"},
    {"1", "2", "15", "16"},
    {"5", "9", "10", "13", "14"},
)


def _load(name: str) -> SignedGraph:
    text = resources.files(__package__).joinpath(name).read_text()
    return parse_edge_list(text)


def load_supreme_court() -> SignedGraph:
    return _load("supreme_court.edges")


def load_slovene_parliament() -> SignedGraph:
    return _load("slovene_parliament.edges")


def load_gahuku_gama() -> SignedGraph:
    return _load("gahuku_gama.edges")
