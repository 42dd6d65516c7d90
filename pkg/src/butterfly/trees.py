"""Plane trees, their decorations, and exhaustive generation.

A plane tree is a rooted tree whose children are linearly ordered. The
canonical text form is the balanced-parenthesis string: each child subtree T
contributes ``"(" + serialize(T) + ")"``, read left to right, so a tree with
n edges serializes to 2n characters and the single vertex to ``""``.

Vertices are addressed by the tuple of child indices walked from the root;
the root is the empty tuple. Under this addressing the (strict) ancestor
relation is exactly the strict-prefix relation, which keeps comparability
tests trivial and stays stable under the subtree surgery the bijections do.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, NamedTuple

from .errors import DomainError, ParseError
from .limits import ensure_within

VertexId = tuple[int, ...]

ROOT: VertexId = ()

RED = "R"
BLUE = "B"
LEAF_COLORS = (RED, BLUE)


@dataclass(frozen=True)
class PlaneTree:
    """Rooted tree with linearly ordered children."""

    children: tuple["PlaneTree", ...] = ()

    @cached_property
    def edge_count(self) -> int:
        return sum(child.edge_count + 1 for child in self.children)

    @property
    def vertex_count(self) -> int:
        return self.edge_count + 1

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def __repr__(self) -> str:  # the paren string is the clearest rendering
        return f"PlaneTree({serialize(self)!r})"


LEAF = PlaneTree()


def serialize(tree: PlaneTree) -> str:
    """Balanced-parenthesis string of ``tree`` (left-to-right glove encoding)."""
    return "".join("(" + serialize(child) + ")" for child in tree.children)


def parse_tree(text: str) -> PlaneTree:
    """Inverse of :func:`serialize`.

    Raises :class:`ParseError` with the offset of the first bad character.
    """
    stack: list[list[PlaneTree]] = [[]]
    for offset, ch in enumerate(text):
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if len(stack) == 1:
                raise ParseError("unmatched ')'", offset)
            children = stack.pop()
            stack[-1].append(PlaneTree(tuple(children)))
        else:
            raise ParseError(f"expected '(' or ')', got {ch!r}", offset)
    if len(stack) > 1:
        raise ParseError("unclosed '('", len(text))
    return PlaneTree(tuple(stack[0]))


def to_nested_lists(tree: PlaneTree) -> list:
    """JSON form: nested arrays of child lists (single vertex is ``[]``)."""
    return [to_nested_lists(child) for child in tree.children]


def from_nested_lists(obj) -> PlaneTree:
    if not isinstance(obj, (list, tuple)):
        raise ParseError(f"expected a list, got {type(obj).__name__}")
    return PlaneTree(tuple(from_nested_lists(item) for item in obj))


def enumerate_trees(n: int) -> Iterator[PlaneTree]:
    """All plane trees with ``n`` edges, lexicographic on their paren strings.

    Yields exactly the n-th Catalan number of distinct trees, with ``(``
    ordered before ``)``.
    """
    if n < 0:
        raise DomainError("edge count must be non-negative")
    ensure_within("trees", n)
    word: list[str] = []

    def extend(opens: int, excess: int) -> Iterator[PlaneTree]:
        if opens == 0 and excess == 0:
            yield parse_tree("".join(word))
            return
        if opens > 0:
            word.append("(")
            yield from extend(opens - 1, excess + 1)
            word.pop()
        if excess > 0:
            word.append(")")
            yield from extend(opens, excess - 1)
            word.pop()

    yield from extend(n, 0)


# ---------------------------------------------------------------------------
# vertex addressing
# ---------------------------------------------------------------------------

def is_strict_ancestor(a: VertexId, b: VertexId) -> bool:
    return len(a) < len(b) and b[: len(a)] == a


def are_comparable(a: VertexId, b: VertexId) -> bool:
    return a == b or is_strict_ancestor(a, b) or is_strict_ancestor(b, a)


def has_vertex(tree: PlaneTree, vertex: VertexId) -> bool:
    node = tree
    for index in vertex:
        if not 0 <= index < len(node.children):
            return False
        node = node.children[index]
    return True


def subtree_at(tree: PlaneTree, vertex: VertexId) -> PlaneTree:
    node = tree
    for index in vertex:
        if not 0 <= index < len(node.children):
            raise DomainError(f"no vertex at address {vertex}")
        node = node.children[index]
    return node


def vertices(tree: PlaneTree) -> Iterator[VertexId]:
    """All vertex addresses in left-to-right preorder."""

    def walk(node: PlaneTree, vertex: VertexId) -> Iterator[VertexId]:
        yield vertex
        for i, child in enumerate(node.children):
            yield from walk(child, vertex + (i,))

    yield from walk(tree, ROOT)


def leaves(tree: PlaneTree) -> list[VertexId]:
    return [v for v in vertices(tree) if subtree_at(tree, v).is_leaf]


def format_vertex(vertex: VertexId) -> str:
    """Slash-delimited index path; the root renders as ``"ε"``."""
    return "ε" if not vertex else "/".join(str(i) for i in vertex)


def parse_vertex(text: str) -> VertexId:
    if text == "ε":
        return ROOT
    try:
        return tuple(int(part) for part in text.split("/"))
    except ValueError:
        raise ParseError(f"bad vertex address {text!r}") from None


# ---------------------------------------------------------------------------
# decorated trees
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DoublyRootedTree:
    """Plane tree with a distinguished vertex (the second root)."""

    tree: PlaneTree
    distinguished: VertexId

    def __post_init__(self):
        if not has_vertex(self.tree, self.distinguished):
            raise DomainError(f"no vertex at address {self.distinguished}")

    @property
    def stem_size(self) -> int:
        """Edge count of the root-to-distinguished path."""
        return len(self.distinguished)


@dataclass(frozen=True)
class KColoredTree:
    """Plane tree whose root children each carry one of ``k`` colors.

    Colors are integers in [0, k). For k=2 (bicolored) 0 is black and
    1 is white; for k=3 (tricolored) 2 is red.
    """

    tree: PlaneTree
    k: int
    root_child_colors: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise DomainError("k must be positive")
        if len(self.root_child_colors) != len(self.tree.children):
            raise DomainError("need exactly one color per root child")
        if any(not 0 <= c < self.k for c in self.root_child_colors):
            raise DomainError(f"colors must lie in [0, {self.k})")


@dataclass(frozen=True)
class LeafColoredTree:
    """Plane tree whose leaves are red or blue, with an optional distinguished vertex.

    Every leaf carries exactly one color except the distinguished vertex,
    which receives no color even if it is a leaf.
    """

    tree: PlaneTree
    leaf_colors: tuple[tuple[VertexId, str], ...]
    distinguished: VertexId | None = None

    @classmethod
    def make(
        cls,
        tree: PlaneTree,
        colors: Mapping[VertexId, str],
        distinguished: VertexId | None = None,
    ) -> "LeafColoredTree":
        return cls(tree, tuple(sorted(colors.items())), distinguished)

    def __post_init__(self):
        if self.distinguished is not None and not has_vertex(self.tree, self.distinguished):
            raise DomainError(f"no vertex at address {self.distinguished}")
        expected = set(leaves(self.tree))
        if self.distinguished is not None:
            expected.discard(self.distinguished)
        colored = [v for v, _ in self.leaf_colors]
        if len(set(colored)) != len(colored):
            raise DomainError("duplicate leaf color entries")
        if set(colored) != expected:
            raise DomainError(
                "colored vertices must be exactly the leaves minus the distinguished vertex"
            )
        if any(c not in LEAF_COLORS for _, c in self.leaf_colors):
            raise DomainError(f"leaf colors must be in {LEAF_COLORS}")

    @property
    def color_map(self) -> dict[VertexId, str]:
        return dict(self.leaf_colors)

    def color_of(self, vertex: VertexId) -> str:
        return self.color_map[vertex]


@dataclass(frozen=True)
class Chain:
    """Nonempty set of pairwise ancestor-comparable vertices of a plane tree.

    Comparable vertices all lie on the root-to-deepest-member path, so a
    chain is a vertex selection along some root-to-leaf path. ``colors``,
    when present, assigns an integer color to every member except the
    deepest one (the deepest member never carries a color).
    """

    tree: PlaneTree
    members: frozenset[VertexId]
    colors: tuple[tuple[VertexId, int], ...] | None = None

    @classmethod
    def make(cls, tree, members, colors: Mapping[VertexId, int] | None = None) -> "Chain":
        normalized = None if colors is None else tuple(sorted(colors.items()))
        return cls(tree, frozenset(members), normalized)

    def __post_init__(self):
        if not self.members:
            raise DomainError("chain must be nonempty")
        ordered = sorted(self.members, key=len)
        for v in ordered:
            if not has_vertex(self.tree, v):
                raise DomainError(f"no vertex at address {v}")
        for shallow, deep in zip(ordered, ordered[1:]):
            if not is_strict_ancestor(shallow, deep):
                raise DomainError(f"{shallow} and {deep} are not comparable")
        if self.colors is not None:
            keys = [v for v, _ in self.colors]
            if len(set(keys)) != len(keys) or not set(keys) <= self.members:
                raise DomainError("chain colors must map a subset of the members")

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def deepest(self) -> VertexId:
        return max(self.members, key=len)

    @property
    def color_map(self) -> dict[VertexId, int]:
        return {} if self.colors is None else dict(self.colors)


def enumerate_chains(tree: PlaneTree) -> Iterator[Chain]:
    """All nonempty chains of ``tree``, each exactly once.

    A chain is determined by its deepest vertex w together with an arbitrary
    subset of w's proper ancestors, so the stream walks vertices in preorder
    and ancestor subsets in binary-counter order.
    """
    ensure_within("chains", tree.edge_count)
    for vertex in vertices(tree):
        ancestors = [vertex[:i] for i in range(len(vertex))]
        for mask in range(1 << len(ancestors)):
            members = {vertex}
            for i, ancestor in enumerate(ancestors):
                if mask >> i & 1:
                    members.add(ancestor)
            yield Chain(tree, frozenset(members))


def chain_count(tree: PlaneTree) -> int:
    """Number of nonempty chains: sum over vertices v of 2^depth(v)."""
    return sum(1 << len(v) for v in vertices(tree))


def format_chain(chain: Chain) -> str:
    """Text form: tree string + ";" + comma-separated member addresses."""
    members = sorted(chain.members, key=len)
    return serialize(chain.tree) + ";" + ",".join(format_vertex(v) for v in members)


def parse_chain(text: str) -> Chain:
    tree_part, sep, member_part = text.partition(";")
    if not sep:
        raise ParseError("chain text needs a ';' separator", len(text))
    tree = parse_tree(tree_part)
    members = [parse_vertex(part) for part in member_part.split(",") if part]
    if not members:
        raise ParseError("chain text lists no members", len(text))
    return Chain.make(tree, members)


# ---------------------------------------------------------------------------
# traversals
# ---------------------------------------------------------------------------

def rl_preorder_labels(tree: PlaneTree) -> dict[VertexId, int]:
    """Label vertices 0..n in right-to-left preorder.

    Visit the root first, then the child subtrees from rightmost to
    leftmost, recursively. The root always gets 0.
    """
    labels: dict[VertexId, int] = {}

    def visit(node: PlaneTree, vertex: VertexId) -> None:
        labels[vertex] = len(labels)
        for i in range(len(node.children) - 1, -1, -1):
            visit(node.children[i], vertex + (i,))

    visit(tree, ROOT)
    return labels


class EdgeVisit(NamedTuple):
    """One of the two visits an edge receives in left-to-right preorder."""

    edge: VertexId  # address of the child end of the edge
    visit: str  # "first" or "second"
    leaf: bool  # True when the edge is external (its child end is a leaf)


def lr_preorder_events(tree: PlaneTree) -> list[EdgeVisit]:
    """The 2n edge-visit events of the left-to-right preorder walk.

    For an external edge the second visit immediately follows the first
    (the walk steps down to the leaf and straight back).
    """
    events: list[EdgeVisit] = []

    def walk(node: PlaneTree, vertex: VertexId) -> None:
        for i, child in enumerate(node.children):
            edge = vertex + (i,)
            events.append(EdgeVisit(edge, "first", child.is_leaf))
            walk(child, edge)
            events.append(EdgeVisit(edge, "second", child.is_leaf))

    walk(tree, ROOT)
    return events


INTERNAL = "internal"
EXTERNAL = "external"


def classify_edges(tree: PlaneTree) -> dict[VertexId, str]:
    """Map each edge (keyed by its child vertex) to internal/external."""
    return {
        v: EXTERNAL if subtree_at(tree, v).is_leaf else INTERNAL
        for v in vertices(tree)
        if v != ROOT
    }


def distinguish_by_label(tree: PlaneTree, m: int) -> DoublyRootedTree:
    """Distinguish the vertex whose right-to-left preorder label is ``m``."""
    if not 0 <= m <= tree.edge_count:
        raise DomainError(f"label {m} out of range [0, {tree.edge_count}]")
    for vertex, label in rl_preorder_labels(tree).items():
        if label == m:
            return DoublyRootedTree(tree, vertex)
    raise AssertionError("labels are a bijection onto 0..n")  # pragma: no cover


# ---------------------------------------------------------------------------
# colored-tree text forms
# ---------------------------------------------------------------------------

def format_kcolored(t: KColoredTree) -> str:
    colors = ",".join(str(c) for c in t.root_child_colors)
    return f"{serialize(t.tree)};{t.k}:{colors}"


def parse_kcolored(text: str) -> KColoredTree:
    tree_part, sep, rest = text.partition(";")
    k_part, sep2, color_part = rest.partition(":")
    if not sep or not sep2:
        raise ParseError("expected '<tree>;<k>:<colors>'", len(text))
    try:
        k = int(k_part)
        colors = tuple(int(c) for c in color_part.split(",") if c != "")
    except ValueError:
        raise ParseError(f"bad color list in {text!r}") from None
    return KColoredTree(parse_tree(tree_part), k, colors)


def format_leafcolored(t: LeafColoredTree) -> str:
    """Tree string + per-leaf colors in preorder ('-' marks the uncolored leaf) + the distinguished vertex."""
    cmap = t.color_map
    marks = "".join(cmap.get(v, "-") for v in leaves(t.tree))
    w = "-" if t.distinguished is None else format_vertex(t.distinguished)
    return f"{serialize(t.tree)};{marks};w={w}"


def parse_leafcolored(text: str) -> LeafColoredTree:
    try:
        tree_part, marks, w_part = text.split(";")
    except ValueError:
        raise ParseError("expected '<tree>;<marks>;w=<vertex>'", len(text)) from None
    if not w_part.startswith("w="):
        raise ParseError("missing 'w=' field", len(text))
    tree = parse_tree(tree_part)
    leaf_list = leaves(tree)
    if len(marks) != len(leaf_list):
        raise ParseError("one color mark per leaf required", len(tree_part) + 1)
    distinguished = None if w_part[2:] == "-" else parse_vertex(w_part[2:])
    colors = {v: mark for v, mark in zip(leaf_list, marks) if mark != "-"}
    return LeafColoredTree.make(tree, colors, distinguished)
