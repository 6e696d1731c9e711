"""Grammar-tree recognition of handwritten math expressions."""

from mathtree.grammar import (
    CommandTable,
    ParseTree,
    Relation,
    SymbolTable,
    parse_latex,
    render_latex,
    serialize_tree,
    deserialize_tree,
    tokenize_latex,
)

__version__ = "0.1.0"

__all__ = [
    "CommandTable",
    "ParseTree",
    "Relation",
    "SymbolTable",
    "parse_latex",
    "render_latex",
    "serialize_tree",
    "deserialize_tree",
    "tokenize_latex",
    "__version__",
]
