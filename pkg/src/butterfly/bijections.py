"""The butterfly decomposition and every correspondence built on it.

A doubly rooted plane tree decomposes along the stem (the path from the
root to the distinguished vertex w): at each stem vertex v_i a *butterfly*
collects the subtrees left of the stem (L_i), the subtrees right of it
(R_i), and the stem edge between them; below the last butterfly hangs the
subtree rooted at w (the tail T'). The decomposition is invertible, and
each correspondence here is a different way of serializing it:

* free Dyck paths: glove-encode L_i and T' above the axis and each planted
  R_i below it, concatenated in stem order;
* bicolored trees: line the pieces up as root children, planting each R_i;
* free Schroder paths: same shape with the red/blue leaf encoding, where a
  red external edge reads UD and a blue one reads H;
* chains: mark which stem vertices belong to the chain, giving tricolored
  (and, with colored chains, k-colored) trees.

All maps round-trip exactly; the accompanying tests certify them on
exhaustive domains.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import DomainError
from .lattice_paths import (
    DOWN,
    DYCK,
    HORIZ,
    NEGATIVE,
    SCHRODER,
    UP,
    LatticePath,
    decompose,
    reflect_steps,
)
from .trees import (
    Chain,
    DoublyRootedTree,
    KColoredTree,
    LeafColoredTree,
    PlaneTree,
    VertexId,
    rl_preorder_labels,
)

BLACK = 0
WHITE = 1
RED_CHILD = 2  # the third class of the tricolored palette


@dataclass(frozen=True)
class Butterfly:
    """A stem edge with the subtrees hanging left and right of its top vertex."""

    left: PlaneTree
    right: PlaneTree

    @property
    def weight(self) -> int:
        """Edges contributed: both wings plus the stem edge itself."""
        return self.left.edge_count + self.right.edge_count + 1


@dataclass(frozen=True)
class ButterflyDecomposition:
    butterflies: tuple[Butterfly, ...]
    tail: PlaneTree

    @property
    def total_edges(self) -> int:
        return sum(b.weight for b in self.butterflies) + self.tail.edge_count


def butterfly_decompose(drt: DoublyRootedTree) -> ButterflyDecomposition:
    """Split a doubly rooted tree along its stem."""
    butterflies = []
    node = drt.tree
    for index in drt.distinguished:
        butterflies.append(
            Butterfly(PlaneTree(node.children[:index]), PlaneTree(node.children[index + 1 :]))
        )
        node = node.children[index]
    return ButterflyDecomposition(tuple(butterflies), node)


def butterfly_compose(decomposition: ButterflyDecomposition) -> DoublyRootedTree:
    """Exact inverse of :func:`butterfly_decompose`."""
    node = decomposition.tail
    reversed_path = []
    for b in reversed(decomposition.butterflies):
        reversed_path.append(len(b.left.children))
        node = PlaneTree(b.left.children + (node,) + b.right.children)
    return DoublyRootedTree(node, tuple(reversed(reversed_path)))


# ---------------------------------------------------------------------------
# the glove bijection and the free Dyck correspondence
# ---------------------------------------------------------------------------

def _glove(tree: PlaneTree) -> str:
    return "".join(UP + _glove(child) + DOWN for child in tree.children)


def _unglove(steps: str) -> PlaneTree:
    stack: list[list[PlaneTree]] = [[]]
    for ch in steps:
        if ch == UP:
            stack.append([])
        else:
            children = stack.pop()
            stack[-1].append(PlaneTree(tuple(children)))
    return PlaneTree(tuple(stack[0]))


def glove_tree_to_dyck(tree: PlaneTree) -> LatticePath:
    """Classical preorder encoding: each subtree T becomes U <T> D."""
    return LatticePath(_glove(tree), DYCK)


def glove_dyck_to_tree(path: LatticePath) -> PlaneTree:
    _require_dyck_alphabet(path)
    if not path.is_free or not path.is_nonnegative:
        raise DomainError("glove inverse needs a Dyck path (free and non-negative)")
    return _unglove(path.steps)


def _require_dyck_alphabet(path: LatticePath) -> None:
    if path.alphabet != DYCK:
        raise DomainError("this map works on the Dyck alphabet")


def _require_free(path: LatticePath) -> None:
    if not path.is_free:
        raise DomainError("path must be free (end on the axis)")


def drt_to_free_dyck(drt: DoublyRootedTree) -> LatticePath:
    """Encode a doubly rooted tree as a free Dyck path.

    Stem order gives P_1 Q_1 ... P_k Q_k P_(k+1): the P_i glove-encode L_i
    (and T' at the end), each Q_i glove-encodes the planted R_i and is then
    reflected below the axis. The planting edge stands for the stem edge,
    so edge counts balance to semilength n.
    """
    decomposition = butterfly_decompose(drt)
    parts = []
    for b in decomposition.butterflies:
        parts.append(_glove(b.left))
        parts.append(reflect_steps(UP + _glove(b.right) + DOWN))
    parts.append(_glove(decomposition.tail))
    return LatticePath("".join(parts), DYCK)


def free_dyck_to_drt(path: LatticePath) -> DoublyRootedTree:
    """Inverse of :func:`drt_to_free_dyck` via the segment decomposition."""
    _require_dyck_alphabet(path)
    _require_free(path)
    butterflies = []
    buffer: list[str] = []
    for segment in decompose(path).segments:
        if segment.kind == NEGATIVE:
            reflected = reflect_steps(segment.steps)  # U <right wing> D
            butterflies.append(
                Butterfly(_unglove("".join(buffer)), _unglove(reflected[1:-1]))
            )
            buffer.clear()
        else:
            buffer.append(segment.steps)
    tail = _unglove("".join(buffer))
    return butterfly_compose(ButterflyDecomposition(tuple(butterflies), tail))


# ---------------------------------------------------------------------------
# bicolored plane trees
# ---------------------------------------------------------------------------

def bicolored_to_free_dyck(t: KColoredTree) -> LatticePath:
    """Black root subtrees dip below the axis, white ones stay above."""
    if t.k != 2:
        raise DomainError("bicolored maps need k = 2")
    parts = []
    for child, color in zip(t.tree.children, t.root_child_colors):
        piece = UP + _glove(child) + DOWN
        parts.append(reflect_steps(piece) if color == BLACK else piece)
    return LatticePath("".join(parts), DYCK)


def free_dyck_to_bicolored(path: LatticePath) -> KColoredTree:
    _require_dyck_alphabet(path)
    _require_free(path)
    children = []
    colors = []
    for segment in decompose(path).segments:
        if segment.kind == NEGATIVE:
            children.append(_unglove(reflect_steps(segment.steps)[1:-1]))
            colors.append(BLACK)
        else:
            children.append(_unglove(segment.steps[1:-1]))
            colors.append(WHITE)
    return KColoredTree(PlaneTree(tuple(children)), 2, tuple(colors))


def drt_to_bicolored(drt: DoublyRootedTree) -> KColoredTree:
    """Direct correspondence, no path intermediate.

    The root children are laid out in stem order L_1 T_1 ... L_k T_k T',
    where T_i is the planted R_i; the L_i and T' pieces inherit black and
    each T_i white. (The route through free Dyck paths produces the same
    tree with the two colors exchanged.)
    """
    decomposition = butterfly_decompose(drt)
    children: list[PlaneTree] = []
    colors: list[int] = []
    for b in decomposition.butterflies:
        children.extend(b.left.children)
        colors.extend([BLACK] * len(b.left.children))
        children.append(b.right)  # the planted R_i contributes one child
        colors.append(WHITE)
    children.extend(decomposition.tail.children)
    colors.extend([BLACK] * len(decomposition.tail.children))
    return KColoredTree(PlaneTree(tuple(children)), 2, tuple(colors))


def bicolored_to_drt(t: KColoredTree) -> DoublyRootedTree:
    """Inverse of :func:`drt_to_bicolored`: white children close butterflies."""
    if t.k != 2:
        raise DomainError("bicolored maps need k = 2")
    butterflies = []
    pending: list[PlaneTree] = []
    for child, color in zip(t.tree.children, t.root_child_colors):
        if color == BLACK:
            pending.append(child)
        else:
            butterflies.append(Butterfly(PlaneTree(tuple(pending)), child))
            pending = []
    tail = PlaneTree(tuple(pending))
    return butterfly_compose(ButterflyDecomposition(tuple(butterflies), tail))


# ---------------------------------------------------------------------------
# Schroder paths and leaf-colored trees
# ---------------------------------------------------------------------------

def _schroder_glove(tree: PlaneTree, colors: Mapping[VertexId, str]) -> str:
    """Preorder edge encoding: internal edges read U ... D, a red external
    edge reads UD, a blue one reads H."""

    def walk(node: PlaneTree, vertex: VertexId) -> str:
        out = []
        for i, child in enumerate(node.children):
            cv = vertex + (i,)
            if child.is_leaf:
                try:
                    color = colors[cv]
                except KeyError:
                    raise DomainError(f"leaf {cv} has no color") from None
                out.append(UP + DOWN if color == "R" else HORIZ)
            else:
                out.append(UP + walk(child, cv) + DOWN)
        return "".join(out)

    return walk(tree, ())


def _schroder_unglove(steps: str) -> tuple[PlaneTree, dict[VertexId, str]]:
    colors: dict[VertexId, str] = {}
    pos = 0

    def parse_forest(vertex: VertexId) -> tuple[PlaneTree, ...]:
        nonlocal pos
        children: list[PlaneTree] = []
        while pos < len(steps) and steps[pos] != DOWN:
            cv = vertex + (len(children),)
            if steps[pos] == HORIZ:
                pos += 1
                colors[cv] = "B"
                children.append(PlaneTree())
            elif pos + 1 < len(steps) and steps[pos + 1] == DOWN:
                pos += 2  # an adjacent UD is a red external edge
                colors[cv] = "R"
                children.append(PlaneTree())
            else:
                pos += 1
                grandchildren = parse_forest(cv)
                if pos >= len(steps) or steps[pos] != DOWN:
                    raise DomainError("unbalanced Schroder path")
                pos += 1
                children.append(PlaneTree(grandchildren))
        return tuple(children)

    forest = parse_forest(())
    if pos != len(steps):
        raise DomainError("unbalanced Schroder path")
    return PlaneTree(forest), colors


def leafcolored_to_schroder(t: LeafColoredTree) -> LatticePath:
    """Encode a leaf-colored plane tree (no distinguished vertex) as a Schroder path."""
    if t.distinguished is not None:
        raise DomainError("this map takes trees without a distinguished vertex")
    return LatticePath(_schroder_glove(t.tree, t.color_map), SCHRODER)


def schroder_to_leafcolored(path: LatticePath) -> LeafColoredTree:
    _require_free(path)
    if not path.is_nonnegative:
        raise DomainError("inverse needs a non-negative Schroder path")
    tree, colors = _schroder_unglove(path.steps)
    return LeafColoredTree.make(tree, colors)


def _slice_colors(
    colors: Mapping[VertexId, str], prefix: VertexId, start: int, stop: int
) -> dict[VertexId, str]:
    """Re-root the colors of children[start:stop] below ``prefix``."""
    depth = len(prefix)
    out = {}
    for v, c in colors.items():
        if len(v) > depth and v[:depth] == prefix and start <= v[depth] < stop:
            out[(v[depth] - start,) + v[depth + 1 :]] = c
    return out


def leafcolored_drt_to_free_schroder(t: LeafColoredTree) -> LatticePath:
    """Encode a leaf-colored doubly rooted tree as a free Schroder path.

    Same shape as :func:`drt_to_free_dyck` with the Schroder leaf encoding:
    L_i and T' map above the axis, each planted R_i below. The distinguished
    vertex carries no color and never needs one: it is the root of T'.
    """
    if t.distinguished is None:
        raise DomainError("this map needs a distinguished vertex")
    colors = t.color_map
    parts = []
    node = t.tree
    prefix: VertexId = ()
    for index in t.distinguished:
        left = PlaneTree(node.children[:index])
        right = PlaneTree(node.children[index + 1 :])
        parts.append(_schroder_glove(left, _slice_colors(colors, prefix, 0, index)))
        planted = UP + _schroder_glove(
            right, _slice_colors(colors, prefix, index + 1, len(node.children))
        ) + DOWN
        parts.append(reflect_steps(planted))
        node = node.children[index]
        prefix += (index,)
    tail_colors = {
        v[len(prefix) :]: c
        for v, c in colors.items()
        if len(v) > len(prefix) and v[: len(prefix)] == prefix
    }
    parts.append(_schroder_glove(node, tail_colors))
    return LatticePath("".join(parts), SCHRODER)


def free_schroder_to_leafcolored_drt(path: LatticePath) -> LeafColoredTree:
    """Inverse of :func:`leafcolored_drt_to_free_schroder`."""
    _require_free(path)
    pieces: list[tuple[tuple[PlaneTree, dict], tuple[PlaneTree, dict]]] = []
    buffer: list[str] = []
    for segment in decompose(path).segments:
        if segment.kind == NEGATIVE:
            left = _schroder_unglove("".join(buffer))
            buffer.clear()
            reflected = reflect_steps(segment.steps)  # U <right wing> D
            pieces.append((left, _schroder_unglove(reflected[1:-1])))
        else:
            buffer.append(segment.steps)
    node, node_colors = _schroder_unglove("".join(buffer))
    reversed_path = []
    for (left, left_colors), (right, right_colors) in reversed(pieces):
        index = len(left.children)
        merged = dict(left_colors)
        merged.update({(index,) + v: c for v, c in node_colors.items()})
        merged.update({(index + 1 + v[0],) + v[1:]: c for v, c in right_colors.items()})
        node = PlaneTree(left.children + (node,) + right.children)
        node_colors = merged
        reversed_path.append(index)
    distinguished = tuple(reversed(reversed_path))
    return LeafColoredTree.make(node, node_colors, distinguished)


# ---------------------------------------------------------------------------
# chains and k-colored trees
# ---------------------------------------------------------------------------

def chain_to_tricolored(chain: Chain) -> KColoredTree:
    """Encode a chain as a tricolored plane tree.

    Decompose along the path to the deepest chain vertex; the L_i and T'
    children turn red, and each planted R_i turns white when its stem
    vertex v_i belongs to the chain, black otherwise. A chain of size m
    therefore yields exactly m-1 white children.
    """
    return _chain_to_kcolored(chain, num_colors=1, chain_colors=None)


def tricolored_to_chain(t: KColoredTree) -> Chain:
    if t.k != 3:
        raise DomainError("tricolored maps need k = 3")
    chain = _kcolored_to_chain(t, num_colors=1)
    return Chain(chain.tree, chain.members)  # drop the trivial colors


def colored_chain_to_kcolored(chain: Chain, num_colors: int) -> KColoredTree:
    """Encode a chain whose non-deepest members carry one of ``num_colors``
    colors as a (num_colors + 2)-colored plane tree.

    Palette: 0 is black (stem vertex outside the chain), 1..num_colors carry
    a chain member's color shifted by one, and num_colors + 1 is red (the
    L_i and T' children). The deepest member never carries a color, so
    num_colors = 1 collapses to the tricolored map.
    """
    if num_colors < 1:
        raise DomainError("need at least one chain color")
    colors = chain.color_map
    expected = chain.members - {chain.deepest}
    if set(colors) != expected:
        raise DomainError("every member except the deepest needs a color")
    if any(not 0 <= c < num_colors for c in colors.values()):
        raise DomainError(f"chain colors must lie in [0, {num_colors})")
    return _chain_to_kcolored(chain, num_colors, colors)


def kcolored_to_colored_chain(t: KColoredTree) -> Chain:
    """Inverse of :func:`colored_chain_to_kcolored` (k >= 3)."""
    if t.k < 3:
        raise DomainError("need k >= 3")
    return _kcolored_to_chain(t, num_colors=t.k - 2)


def _chain_to_kcolored(
    chain: Chain, num_colors: int, chain_colors: Mapping[VertexId, int] | None
) -> KColoredTree:
    red = num_colors + 1
    children: list[PlaneTree] = []
    colors: list[int] = []
    node = chain.tree
    prefix: VertexId = ()
    for index in chain.deepest:
        children.extend(node.children[:index])
        colors.extend([red] * index)
        children.append(PlaneTree(node.children[index + 1 :]))
        if prefix in chain.members:
            colors.append(1 if chain_colors is None else 1 + chain_colors[prefix])
        else:
            colors.append(BLACK)
        node = node.children[index]
        prefix += (index,)
    children.extend(node.children)
    colors.extend([red] * len(node.children))
    return KColoredTree(PlaneTree(tuple(children)), num_colors + 2, tuple(colors))


def _kcolored_to_chain(t: KColoredTree, num_colors: int) -> Chain:
    red = num_colors + 1
    butterflies = []
    marks: list[int | None] = []  # chain color of v_i, None when outside
    pending: list[PlaneTree] = []
    for child, color in zip(t.tree.children, t.root_child_colors):
        if color == red:
            pending.append(child)
        else:
            butterflies.append(Butterfly(PlaneTree(tuple(pending)), child))
            marks.append(None if color == BLACK else color - 1)
            pending = []
    tail = PlaneTree(tuple(pending))
    drt = butterfly_compose(ButterflyDecomposition(tuple(butterflies), tail))
    members = {drt.distinguished}
    colors: dict[VertexId, int] = {}
    for i, mark in enumerate(marks):
        if mark is not None:
            vertex = drt.distinguished[:i]
            members.add(vertex)
            colors[vertex] = mark
    return Chain.make(drt.tree, members, colors)


# ---------------------------------------------------------------------------
# stem statistics
# ---------------------------------------------------------------------------

def stem_size(drt: DoublyRootedTree) -> int:
    """Edge count of the root-to-distinguished path (equals flaw blocks)."""
    return drt.stem_size


def prefix_edge_count(drt: DoublyRootedTree) -> int:
    """Edges on or right of the stem (equals flaws in the path image).

    These are exactly the edges whose child end carries a right-to-left
    preorder label not exceeding the distinguished vertex's label, so the
    count is that label itself.
    """
    return rl_preorder_labels(drt.tree)[drt.distinguished]
