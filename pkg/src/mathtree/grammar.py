"""Math-markup grammar: symbol tables, spatial relations, and parse trees.

The grammar has two non-terminals.  An expression node S expands to a
terminal symbol followed by another S, to an extendable structure E, or to
the empty string.  An E node holds up to seven relation-labelled child
expressions (right, above, below, low_right, upper_left, upper_right,
inside), stored strictly in that order so that every expression has exactly
one canonical tree no matter which of several equivalent markups produced
it.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass, field


class GrammarError(Exception):
    """Base class for markup / tree errors."""


class UnknownCommand(GrammarError):
    pass


class UnbalancedBraces(GrammarError):
    pass


class SymbolNotInTable(GrammarError):
    pass


class MalformedScript(GrammarError):
    pass


class NodeNotFound(GrammarError):
    pass


class TreeFormatError(GrammarError):
    pass


class Relation(enum.IntEnum):
    """The seven spatial relations, in canonical (index) order."""

    RIGHT = 0
    ABOVE = 1
    BELOW = 2
    LOW_RIGHT = 3
    UPPER_LEFT = 4
    UPPER_RIGHT = 5
    INSIDE = 6


RELATION_NAMES = {
    Relation.RIGHT: "right",
    Relation.ABOVE: "above",
    Relation.BELOW: "below",
    Relation.LOW_RIGHT: "low_right",
    Relation.UPPER_LEFT: "upper_left",
    Relation.UPPER_RIGHT: "upper_right",
    Relation.INSIDE: "inside",
}
RELATIONS_BY_NAME = {name: rel for rel, name in RELATION_NAMES.items()}
NUM_RELATIONS = 7

# Skeleton placeholder: a reserved identifier that is never a legal table entry.
PLACEHOLDER_INDEX = -1
PLACEHOLDER_IDENTIFIER = "#"


class SymbolTable:
    """Ordered terminal-symbol alphabet plus the two reserved classes.

    Class indices 0..n-1 are the terminals in file/line order; index n is the
    extendable-structure class and index n+1 the empty-string class, giving
    n+2 prediction classes in total.
    """

    def __init__(self, entries: list[str]):
        seen = set()
        for ident in entries:
            if not ident:
                raise GrammarError("empty symbol identifier")
            if ident in seen:
                raise GrammarError(f"duplicate symbol identifier {ident!r}")
            if ident == PLACEHOLDER_IDENTIFIER:
                raise GrammarError(
                    f"{PLACEHOLDER_IDENTIFIER!r} is reserved for skeletons"
                )
            seen.add(ident)
        self.entries = list(entries)
        self._index = {ident: i for i, ident in enumerate(self.entries)}

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, ident: str) -> bool:
        return ident in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, SymbolTable) and self.entries == other.entries

    @property
    def num_classes(self) -> int:
        return len(self.entries) + 2

    @property
    def ext_class(self) -> int:
        return len(self.entries)

    @property
    def eps_class(self) -> int:
        return len(self.entries) + 1

    def index(self, ident: str) -> int:
        try:
            return self._index[ident]
        except KeyError:
            raise SymbolNotInTable(f"symbol {ident!r} not in table") from None

    def identifier(self, index: int) -> str:
        if index == PLACEHOLDER_INDEX:
            return PLACEHOLDER_IDENTIFIER
        if not 0 <= index < len(self.entries):
            raise SymbolNotInTable(f"symbol index {index} out of range")
        return self.entries[index]

    @classmethod
    def from_file(cls, path) -> "SymbolTable":
        with open(path, encoding="utf-8") as fh:
            entries = [line.rstrip("\n") for line in fh if line.rstrip("\n")]
        return cls(entries)

    def to_file(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for ident in self.entries:
                fh.write(ident + "\n")


# ---------------------------------------------------------------------------
# Parse-tree nodes
# ---------------------------------------------------------------------------


@dataclass
class SSym:
    """S -> symbol S."""

    symbol: int
    next: "SNode"
    id: int = -1


@dataclass
class SExt:
    """S -> E."""

    ext: "ENode"
    id: int = -1


@dataclass
class SEps:
    """S -> empty string."""

    id: int = -1


@dataclass
class ENode:
    """Relation-labelled branches, strictly increasing in relation index."""

    branches: list[tuple[Relation, "SNode"]]
    id: int = -1


SNode = SSym | SExt | SEps
Node = SSym | SExt | SEps | ENode


def _children(node: Node) -> list[Node]:
    if isinstance(node, SSym):
        return [node.next]
    if isinstance(node, SExt):
        return [node.ext]
    if isinstance(node, ENode):
        return [child for _, child in node.branches]
    return []


@dataclass
class ParseTree:
    """A canonical parse tree over a symbol table.

    Construction assigns preorder node ids 0..n-1 and validates the node
    invariants; trees are treated as immutable afterwards.
    """

    root: SNode
    table: SymbolTable
    _nodes: list[Node] = field(default_factory=list, repr=False)
    _parent: dict[int, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not isinstance(self.root, (SSym, SExt, SEps)):
            raise GrammarError("tree root must be an S-kind node")
        self._nodes = []
        self._parent = {}
        stack: list[tuple[Node, int]] = [(self.root, -1)]
        while stack:
            node, parent_id = stack.pop()
            node.id = len(self._nodes)
            self._nodes.append(node)
            if parent_id >= 0:
                self._parent[node.id] = parent_id
            self._validate(node)
            for child in reversed(_children(node)):
                stack.append((child, node.id))

    def _validate(self, node: Node) -> None:
        if isinstance(node, SSym):
            if node.symbol != PLACEHOLDER_INDEX:
                self.table.identifier(node.symbol)
        elif isinstance(node, ENode):
            if not node.branches:
                raise GrammarError("E node must carry at least one branch")
            rels = [rel for rel, _ in node.branches]
            if any(b <= a for a, b in zip(rels, rels[1:])):
                raise GrammarError(
                    "E branches must be strictly increasing in relation order"
                )

    @property
    def node_count(self) -> int:
        return len(self._nodes)

    def node(self, node_id: int) -> Node:
        if not 0 <= node_id < len(self._nodes):
            raise NodeNotFound(f"no node with id {node_id}")
        return self._nodes[node_id]

    def parent_id(self, node_id: int) -> int | None:
        self.node(node_id)
        return self._parent.get(node_id)


def preorder(tree: ParseTree) -> list[Node]:
    """All nodes, parents first, E branches in canonical relation order."""
    return list(tree._nodes)


def path_to(tree: ParseTree, node_id: int) -> list[int]:
    """Node ids from the root down to ``node_id`` (inclusive)."""
    tree.node(node_id)
    path = [node_id]
    while (up := tree._parent.get(path[-1])) is not None:
        path.append(up)
    path.reverse()
    return path


def tree_equal(a: ParseTree, b: ParseTree) -> bool:
    """Structural equality over kinds, symbols and relations; ids ignored."""

    def eq(x: Node, y: Node) -> bool:
        if type(x) is not type(y):
            return False
        if isinstance(x, SSym):
            return x.symbol == y.symbol and eq(x.next, y.next)
        if isinstance(x, SExt):
            return eq(x.ext, y.ext)
        if isinstance(x, ENode):
            if len(x.branches) != len(y.branches):
                return False
            return all(
                rx == ry and eq(cx, cy)
                for (rx, cx), (ry, cy) in zip(x.branches, y.branches)
            )
        return True

    return eq(a.root, b.root)


def copy_tree(tree: ParseTree) -> ParseTree:
    return ParseTree(_copy_node(tree.root), tree.table)


def _copy_node(node: Node) -> Node:
    if isinstance(node, SSym):
        return SSym(node.symbol, _copy_node(node.next))
    if isinstance(node, SExt):
        return SExt(_copy_node(node.ext))
    if isinstance(node, ENode):
        return ENode([(rel, _copy_node(child)) for rel, child in node.branches])
    return SEps()


def structure_skeleton(tree: ParseTree) -> ParseTree:
    """Same shape and relations with every terminal replaced by a placeholder."""

    def strip(node: Node) -> Node:
        if isinstance(node, SSym):
            return SSym(PLACEHOLDER_INDEX, strip(node.next))
        if isinstance(node, SExt):
            return SExt(strip(node.ext))
        if isinstance(node, ENode):
            return ENode([(rel, strip(child)) for rel, child in node.branches])
        return SEps()

    return ParseTree(strip(tree.root), tree.table)


# ---------------------------------------------------------------------------
# Commands and tokenization
# ---------------------------------------------------------------------------

# Command kinds:
#   plain   terminal; ^/_ scripts attach upper_right/low_right
#   large   terminal; ^/_ scripts attach above/below
#   frac    terminal taking two arguments (above, below)
#   sqrt    terminal taking one argument (inside)
#   limits  layout modifier, absorbed without effect
#   attach  one-argument command attaching a named relation to the left atom
@dataclass(frozen=True)
class CommandSpec:
    name: str
    kind: str
    relation: Relation | None = None


_LARGE_OPERATORS = (
    "\\sum", "\\prod", "\\coprod", "\\int", "\\oint",
    "\\lim", "\\bigcup", "\\bigcap",
)
_PLAIN_COMMANDS = (
    "\\alpha", "\\beta", "\\gamma", "\\delta", "\\epsilon", "\\theta",
    "\\lambda", "\\mu", "\\pi", "\\sigma", "\\phi", "\\omega",
    "\\infty", "\\times", "\\div", "\\pm", "\\cdot", "\\leq", "\\geq",
    "\\neq", "\\rightarrow", "\\leftarrow", "\\in", "\\subset",
    "\\cup", "\\cap", "\\log", "\\sin", "\\cos", "\\tan", "\\exp",
    "\\ldots", "\\cdots", "\\prime",
)
# Explicit relation attachments; these keep rendering total on trees whose
# relations have no script/argument form on their base symbol.
_ATTACH_COMMANDS = {
    "\\above": Relation.ABOVE,
    "\\below": Relation.BELOW,
    "\\inside": Relation.INSIDE,
    "\\upright": Relation.UPPER_RIGHT,
    "\\lowright": Relation.LOW_RIGHT,
}
_UPPER_LEFT_COMMAND = "\\upleft"


class CommandTable:
    """The configured backslash-command set for tokenizing and parsing."""

    def __init__(self, specs: list[CommandSpec]):
        self.specs = {spec.name: spec for spec in specs}

    def __contains__(self, name: str) -> bool:
        return name in self.specs

    def get(self, name: str) -> CommandSpec:
        return self.specs[name]

    @classmethod
    def default(cls, upper_left: bool = False) -> "CommandTable":
        specs = [CommandSpec(name, "plain") for name in _PLAIN_COMMANDS]
        specs += [CommandSpec(name, "large") for name in _LARGE_OPERATORS]
        specs += [
            CommandSpec("\\frac", "frac"),
            CommandSpec("\\sqrt", "sqrt"),
            CommandSpec("\\limits", "limits"),
        ]
        specs += [
            CommandSpec(name, "attach", rel)
            for name, rel in _ATTACH_COMMANDS.items()
        ]
        if upper_left:
            specs.append(
                CommandSpec(_UPPER_LEFT_COMMAND, "attach", Relation.UPPER_LEFT)
            )
        return cls(specs)

    @classmethod
    def from_file(cls, path) -> "CommandTable":
        """Load ``name<TAB>kind[<TAB>relation]`` lines."""
        specs = []
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) == 2:
                    specs.append(CommandSpec(parts[0], parts[1]))
                elif len(parts) == 3:
                    specs.append(
                        CommandSpec(parts[0], parts[1], RELATIONS_BY_NAME[parts[2]])
                    )
                else:
                    raise GrammarError(f"bad command spec on line {lineno}")
        return cls(specs)


DEFAULT_COMMANDS = CommandTable.default()

_STRUCTURAL = {"{", "}", "^", "_"}


def tokenize_latex(markup: str, commands: CommandTable | None = None) -> list[str]:
    """Split markup into command, structural and single-character tokens."""
    commands = commands or DEFAULT_COMMANDS
    tokens: list[str] = []
    depth = 0
    i, n = 0, len(markup)
    while i < n:
        ch = markup[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "\\":
            j = i + 1
            while j < n and (markup[j].isalpha()):
                j += 1
            if j == i + 1:
                raise UnknownCommand(f"bare backslash at position {i}")
            name = markup[i:j]
            if name not in commands:
                raise UnknownCommand(f"unknown command {name}")
            tokens.append(name)
            i = j
            continue
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                raise UnbalancedBraces(f"unmatched '}}' at position {i}")
        if unicodedata.category(ch).startswith("C"):
            raise GrammarError(f"control character at position {i}")
        tokens.append(ch)
        i += 1
    if depth != 0:
        raise UnbalancedBraces("unclosed '{' in markup")
    return tokens


def detokenize(tokens: list[str]) -> str:
    """Join tokens back into markup, spacing commands off following letters."""
    out: list[str] = []
    for k, tok in enumerate(tokens):
        out.append(tok)
        if tok.startswith("\\") and k + 1 < len(tokens) and tokens[k + 1][0].isalpha():
            out.append(" ")
    return "".join(out)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


@dataclass
class _Atom:
    symbol: int | None  # None for a base-less script/attachment cluster
    base_kind: str  # plain | large | frac | sqrt
    branches: dict[Relation, SNode]


class _TokenStream:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok


def parse_latex(
    tokens: list[str],
    table: SymbolTable,
    commands: CommandTable | None = None,
) -> ParseTree:
    """Build the canonical parse tree for a token sequence.

    Equivalent markups (script order swapped, redundant braces, ``\\limits``)
    produce structurally identical trees.
    """
    commands = commands or DEFAULT_COMMANDS
    stream = _TokenStream(list(tokens))
    root = _parse_sequence(stream, table, commands, top_level=True)
    if stream.peek() is not None:
        raise UnbalancedBraces(f"unexpected {stream.peek()!r}")
    return ParseTree(root, table)


def _parse_sequence(
    stream: _TokenStream,
    table: SymbolTable,
    commands: CommandTable,
    top_level: bool,
) -> SNode:
    atoms = _collect_atoms(stream, table, commands, top_level)
    return _fold_atoms(atoms)


def _collect_atoms(
    stream: _TokenStream,
    table: SymbolTable,
    commands: CommandTable,
    top_level: bool,
) -> list[_Atom]:
    atoms: list[_Atom] = []
    while True:
        tok = stream.peek()
        if tok is None:
            if not top_level:
                raise UnbalancedBraces("unclosed group")
            return atoms
        if tok == "}":
            if top_level:
                raise UnbalancedBraces("unmatched '}'")
            stream.take()
            return atoms
        stream.take()
        if tok == "{":
            inner = _collect_atoms(stream, table, commands, top_level=False)
            atoms.extend(inner)
        elif tok in ("^", "_"):
            child = _parse_argument(stream, table, commands, tok)
            atom = _script_target(atoms)
            rel = _script_relation(tok, atom.base_kind)
            _attach(atom, rel, child)
        elif tok.startswith("\\"):
            spec = commands.get(tok)
            if spec.kind == "limits":
                continue
            if spec.kind == "attach":
                child = _parse_argument(stream, table, commands, tok)
                _attach(_script_target(atoms), spec.relation, child)
                continue
            atom = _Atom(table.index(tok), spec.kind, {})
            if spec.kind == "frac":
                num = _parse_argument(stream, table, commands, tok)
                den = _parse_argument(stream, table, commands, tok)
                atom.branches[Relation.ABOVE] = num
                atom.branches[Relation.BELOW] = den
            elif spec.kind == "sqrt":
                atom.branches[Relation.INSIDE] = _parse_argument(
                    stream, table, commands, tok
                )
            atoms.append(atom)
        else:
            atoms.append(_Atom(table.index(tok), "plain", {}))


def _script_target(atoms: list[_Atom]) -> _Atom:
    """The atom a script or attachment applies to; made fresh when leading."""
    if not atoms:
        atoms.append(_Atom(None, "plain", {}))
    return atoms[-1]


def _script_relation(tok: str, base_kind: str) -> Relation:
    if base_kind == "large":
        return Relation.ABOVE if tok == "^" else Relation.BELOW
    return Relation.UPPER_RIGHT if tok == "^" else Relation.LOW_RIGHT


def _attach(atom: _Atom, rel: Relation, child: SNode) -> None:
    if rel in atom.branches:
        raise MalformedScript(f"duplicate {RELATION_NAMES[rel]} attachment")
    atom.branches[rel] = child


def _parse_argument(
    stream: _TokenStream,
    table: SymbolTable,
    commands: CommandTable,
    owner: str,
) -> SNode:
    """A braced group, or a single symbol token as in ``a^b``."""
    tok = stream.peek()
    if tok is None:
        raise MalformedScript(f"missing argument after {owner!r}")
    if tok == "{":
        stream.take()
        return _fold_atoms(_collect_atoms(stream, table, commands, top_level=False))
    if tok in ("^", "_", "}"):
        raise MalformedScript(f"missing argument after {owner!r}")
    stream.take()
    if tok.startswith("\\"):
        spec = commands.get(tok)
        if spec.kind in ("limits", "attach"):
            raise MalformedScript(f"{tok} cannot be a bare argument")
        if spec.kind in ("frac", "sqrt"):
            # \frac / \sqrt as a bare argument still take their own arguments
            atom = _Atom(table.index(tok), spec.kind, {})
            if spec.kind == "frac":
                atom.branches[Relation.ABOVE] = _parse_argument(
                    stream, table, commands, tok
                )
                atom.branches[Relation.BELOW] = _parse_argument(
                    stream, table, commands, tok
                )
            else:
                atom.branches[Relation.INSIDE] = _parse_argument(
                    stream, table, commands, tok
                )
            return _fold_atoms([atom])
    return SSym(table.index(tok), SEps())


def _fold_atoms(atoms: list[_Atom]) -> SNode:
    """Right-fold atoms into the S chain, canonically ordering E branches."""
    node: SNode = SEps()
    for atom in reversed(atoms):
        if atom.branches:
            branches = dict(atom.branches)
            if not isinstance(node, SEps):
                if Relation.RIGHT in branches:
                    raise MalformedScript("conflicting right attachment")
                branches[Relation.RIGHT] = node
            enode = ENode(sorted(branches.items(), key=lambda kv: kv[0]))
            ext = SExt(enode)
            node = SSym(atom.symbol, ext) if atom.symbol is not None else ext
        else:
            if atom.symbol is None:
                continue
            node = SSym(atom.symbol, node)
    return node


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

# Rendering emits, per base kind, the idiomatic form of each relation; all
# remaining relations fall back to explicit attachment commands.  Script
# pairs render upper before lower (upper_right before low_right, above
# before below) so re-parsing is its own fixed point.
_IDIOMATIC = {
    "plain": {Relation.UPPER_RIGHT: "^", Relation.LOW_RIGHT: "_"},
    "large": {Relation.ABOVE: "^", Relation.BELOW: "_"},
    "frac": {Relation.ABOVE: "arg", Relation.BELOW: "arg"},
    "sqrt": {Relation.INSIDE: "arg"},
}
_RENDER_ORDER = [
    Relation.ABOVE,
    Relation.BELOW,
    Relation.INSIDE,
    Relation.UPPER_RIGHT,
    Relation.LOW_RIGHT,
    Relation.UPPER_LEFT,
]
_ATTACH_BY_RELATION = {rel: name for name, rel in _ATTACH_COMMANDS.items()}
_ATTACH_BY_RELATION[Relation.UPPER_LEFT] = _UPPER_LEFT_COMMAND


def render_latex(tree: ParseTree, commands: CommandTable | None = None) -> str:
    """Deterministic canonical markup; parsing it back reproduces the tree."""
    commands = commands or DEFAULT_COMMANDS
    tokens: list[str] = []
    _render_s(tree.root, tree.table, commands, tokens)
    return detokenize(tokens)


def _base_kind(ident: str, commands: CommandTable) -> str:
    if ident.startswith("\\") and ident in commands:
        kind = commands.get(ident).kind
        if kind in _IDIOMATIC:
            return kind
    return "plain"


def _render_s(node: SNode, table, commands, out: list[str]) -> None:
    while True:
        if isinstance(node, SEps):
            return
        if isinstance(node, SExt):
            _render_ext(None, node.ext, table, commands, out)
            return
        ident = table.identifier(node.symbol)
        if isinstance(node.next, SExt):
            out.append(ident)
            _render_ext(ident, node.next.ext, table, commands, out)
            return
        out.append(ident)
        node = node.next


def _render_ext(base: str | None, enode: ENode, table, commands, out) -> None:
    branches = dict(enode.branches)
    idiomatic = _IDIOMATIC[_base_kind(base, commands)] if base else {}
    right = branches.pop(Relation.RIGHT, None)
    for rel in _RENDER_ORDER:
        if rel not in branches:
            continue
        child = branches[rel]
        form = idiomatic.get(rel)
        if form == "arg":
            _render_group(child, table, commands, out)
        elif form in ("^", "_"):
            out.append(form)
            _render_group(child, table, commands, out)
        else:
            out.append(_ATTACH_BY_RELATION[rel])
            _render_group(child, table, commands, out)
    if right is not None:
        _render_s(right, table, commands, out)


def _render_group(node: SNode, table, commands, out) -> None:
    out.append("{")
    _render_s(node, table, commands, out)
    out.append("}")


# ---------------------------------------------------------------------------
# Tree serialization
# ---------------------------------------------------------------------------


def serialize_tree(tree: ParseTree) -> str:
    """Single-line s-expression form, bit-stable across runs."""
    parts: list[str] = []
    _serialize_s(tree.root, tree.table, parts)
    return "".join(parts)


def _serialize_s(node: SNode, table, parts: list[str]) -> None:
    if isinstance(node, SEps):
        parts.append("(eps)")
    elif isinstance(node, SSym):
        parts.append(f"(S {table.identifier(node.symbol)} ")
        _serialize_s(node.next, table, parts)
        parts.append(")")
    else:
        parts.append("(E")
        for rel, child in node.ext.branches:
            parts.append(f" ({RELATION_NAMES[rel]} ")
            _serialize_s(child, table, parts)
            parts.append(")")
        parts.append(")")


def deserialize_tree(text: str, table: SymbolTable) -> ParseTree:
    toks = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def expect(tok: str) -> None:
        nonlocal pos
        if pos >= len(toks) or toks[pos] != tok:
            raise TreeFormatError(f"expected {tok!r} at item {pos}")
        pos += 1

    def take() -> str:
        nonlocal pos
        if pos >= len(toks):
            raise TreeFormatError("unexpected end of tree text")
        tok = toks[pos]
        pos += 1
        return tok

    def parse_s() -> SNode:
        nonlocal pos
        expect("(")
        head = take()
        if head == "eps":
            expect(")")
            return SEps()
        if head == "S":
            ident = take()
            if ident == PLACEHOLDER_IDENTIFIER:
                sym = PLACEHOLDER_INDEX
            else:
                sym = table.index(ident)
            nxt = parse_s()
            expect(")")
            return SSym(sym, nxt)
        if head == "E":
            branches = []
            while pos < len(toks) and toks[pos] == "(":
                expect("(")
                name = take()
                if name not in RELATIONS_BY_NAME:
                    raise TreeFormatError(f"unknown relation {name!r}")
                child = parse_s()
                expect(")")
                branches.append((RELATIONS_BY_NAME[name], child))
            expect(")")
            return SExt(ENode(branches))
        raise TreeFormatError(f"unknown node head {head!r}")

    root = parse_s()
    if pos != len(toks):
        raise TreeFormatError("trailing content after tree")
    return ParseTree(root, table)


# ---------------------------------------------------------------------------
# Derived measures
# ---------------------------------------------------------------------------


def canonical_tokens(tree: ParseTree, commands: CommandTable | None = None) -> list[str]:
    """Tokens of the canonical rendering (the token-level edit alphabet)."""
    commands = commands or DEFAULT_COMMANDS
    tokens: list[str] = []
    _render_s(tree.root, tree.table, commands, tokens)
    return tokens


def structural_complexity(tree: ParseTree) -> int:
    """Maximum nesting depth of E nodes on any root-to-leaf path."""

    def depth(node: Node, acc: int) -> int:
        if isinstance(node, ENode):
            acc += 1
        kids = _children(node)
        if not kids:
            return acc
        return max(depth(child, acc) for child in kids)

    return depth(tree.root, 0)


def symbol_count(tree: ParseTree) -> int:
    return sum(1 for node in tree._nodes if isinstance(node, SSym))


def default_symbol_table() -> SymbolTable:
    """A general-purpose alphabet: letters, digits, operators, commands."""
    entries = [chr(c) for c in range(ord("a"), ord("z") + 1)]
    entries += [chr(c) for c in range(ord("A"), ord("Z") + 1)]
    entries += [str(d) for d in range(10)]
    entries += list("+-=()[]|!<>,.:;/'")
    entries += list(_PLAIN_COMMANDS)
    entries += list(_LARGE_OPERATORS)
    entries += ["\\frac", "\\sqrt"]
    return SymbolTable(entries)
