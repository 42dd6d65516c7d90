"""Exhaustive certification of the bijections, involutions, and identities.

Each target enumerates its whole domain at the requested size, checks the
claimed properties object by object, and reports a verdict with counted
checks and up to a handful of counterexamples. Bijection and involution
targets run at exactly the given n; identity targets sweep all sizes up
to n, since their statements quantify over n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from . import bijections as bj
from . import involutions as iv
from . import lattice_paths as lp
from . import series_counting as sc
from . import trees as tr
from .errors import DomainError


@dataclass(frozen=True)
class Verdict:
    target: str
    n: int
    checked: int
    passed: bool
    details: tuple[str, ...] = ()
    failures: tuple[str, ...] = ()


class _Recorder:
    """Counts checks and keeps the first few counterexamples."""

    MAX_REPORTED = 5

    def __init__(self):
        self.checked = 0
        self.failed = 0
        self.failures: list[str] = []
        self.details: list[str] = []

    def check(self, ok: bool, describe: str) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < self.MAX_REPORTED:
                self.failures.append(describe)

    def note(self, line: str) -> None:
        self.details.append(line)

    def verdict(self, target: str, n: int) -> Verdict:
        return Verdict(
            target=target,
            n=n,
            checked=self.checked,
            passed=self.failed == 0,
            details=tuple(self.details),
            failures=tuple(self.failures),
        )


# ---------------------------------------------------------------------------
# exhaustive domain enumerators
# ---------------------------------------------------------------------------

def enumerate_drts(n: int) -> Iterator[tr.DoublyRootedTree]:
    for tree in tr.enumerate_trees(n):
        for vertex in tr.vertices(tree):
            yield tr.DoublyRootedTree(tree, vertex)


def enumerate_kcolored(n: int, k: int) -> Iterator[tr.KColoredTree]:
    for tree in tr.enumerate_trees(n):
        arity = len(tree.children)
        for colors in product(range(k), repeat=arity):
            yield tr.KColoredTree(tree, k, colors)


def enumerate_leafcolored(n: int) -> Iterator[tr.LeafColoredTree]:
    for tree in tr.enumerate_trees(n):
        leaf_list = tr.leaves(tree)
        for colors in product(tr.LEAF_COLORS, repeat=len(leaf_list)):
            yield tr.LeafColoredTree.make(tree, dict(zip(leaf_list, colors)))


def enumerate_leafcolored_drts(n: int) -> Iterator[tr.LeafColoredTree]:
    for tree in tr.enumerate_trees(n):
        leaf_list = tr.leaves(tree)
        for w in tr.vertices(tree):
            colorable = [v for v in leaf_list if v != w]
            for colors in product(tr.LEAF_COLORS, repeat=len(colorable)):
                yield tr.LeafColoredTree.make(tree, dict(zip(colorable, colors)), w)


def enumerate_all_chains(n: int) -> Iterator[tr.Chain]:
    for tree in tr.enumerate_trees(n):
        yield from tr.enumerate_chains(tree)


def enumerate_colored_chains(n: int, num_colors: int) -> Iterator[tr.Chain]:
    for chain in enumerate_all_chains(n):
        colorable = sorted(chain.members - {chain.deepest})
        for colors in product(range(num_colors), repeat=len(colorable)):
            yield tr.Chain.make(chain.tree, chain.members, dict(zip(colorable, colors)))


def kcolored_tree_count(n: int, k: int) -> int:
    """[x^n] 1/(1 - k x C), the number of k-colored plane trees."""
    order = n + 1
    series = (sc.one(order) - k * (sc.x(order) * sc.catalan_series(order))).reciprocal()
    return series.coeff(n)


# ---------------------------------------------------------------------------
# bijection targets
# ---------------------------------------------------------------------------

def _certify_pairing(
    rec: _Recorder,
    domain,
    forward: Callable,
    backward: Callable,
    codomain,
    describe_obj: Callable,
    describe_img: Callable,
) -> None:
    """Round-trip every object and demand the image is exactly ``codomain``."""
    images = []
    for obj in domain:
        image = forward(obj)
        back = backward(image)
        rec.check(back == obj, f"round trip broke at {describe_obj(obj)}")
        images.append(image)
    expected = set(codomain)
    rec.check(len(set(images)) == len(images), "forward map is not injective")
    rec.check(
        set(images) == expected,
        f"image has {len(set(images))} members, codomain {len(expected)}",
    )
    rec.note(f"objects: {len(images)}")


def _verify_glove(n: int) -> Verdict:
    rec = _Recorder()
    _certify_pairing(
        rec,
        tr.enumerate_trees(n),
        bj.glove_tree_to_dyck,
        bj.glove_dyck_to_tree,
        lp.enumerate_paths(lp.DYCK, n, lp.NONNEG_CONSTRAINT),
        lambda t: tr.serialize(t),
        lambda p: p.steps,
    )
    rec.note(f"catalan({n}) = {sc.catalan(n)}")
    return rec.verdict("bijection glove", n)


def _verify_butterfly(n: int) -> Verdict:
    rec = _Recorder()
    count = 0
    for drt in enumerate_drts(n):
        decomposition = bj.butterfly_decompose(drt)
        rec.check(
            decomposition.total_edges == n,
            f"edge balance broke at {tr.serialize(drt.tree)} w={drt.distinguished}",
        )
        rec.check(
            bj.butterfly_compose(decomposition) == drt,
            f"round trip broke at {tr.serialize(drt.tree)} w={drt.distinguished}",
        )
        count += 1
    rec.check(
        count == sc.central_binomial(n),
        f"saw {count} doubly rooted trees, expected binomial(2n,n) = {sc.central_binomial(n)}",
    )
    rec.note(f"objects: {count}")
    return rec.verdict("bijection butterfly", n)


def _verify_drt_free_dyck(n: int) -> Verdict:
    rec = _Recorder()
    _certify_pairing(
        rec,
        enumerate_drts(n),
        bj.drt_to_free_dyck,
        bj.free_dyck_to_drt,
        lp.enumerate_paths(lp.DYCK, n, lp.FREE_CONSTRAINT),
        lambda d: f"{tr.serialize(d.tree)} w={d.distinguished}",
        lambda p: p.steps,
    )
    rec.note(f"central binomial = {sc.central_binomial(n)}")
    return rec.verdict("bijection drt-free-dyck", n)


def _verify_bicolored_free_dyck(n: int) -> Verdict:
    rec = _Recorder()
    _certify_pairing(
        rec,
        enumerate_kcolored(n, 2),
        bj.bicolored_to_free_dyck,
        bj.free_dyck_to_bicolored,
        lp.enumerate_paths(lp.DYCK, n, lp.FREE_CONSTRAINT),
        tr.format_kcolored,
        lambda p: p.steps,
    )
    return rec.verdict("bijection bicolored-free-dyck", n)


def _verify_drt_bicolored(n: int) -> Verdict:
    rec = _Recorder()
    _certify_pairing(
        rec,
        enumerate_drts(n),
        bj.drt_to_bicolored,
        bj.bicolored_to_drt,
        enumerate_kcolored(n, 2),
        lambda d: f"{tr.serialize(d.tree)} w={d.distinguished}",
        tr.format_kcolored,
    )
    return rec.verdict("bijection drt-bicolored", n)


def _verify_leafcolored_schroder(n: int) -> Verdict:
    rec = _Recorder()
    _certify_pairing(
        rec,
        enumerate_leafcolored(n),
        bj.leafcolored_to_schroder,
        bj.schroder_to_leafcolored,
        lp.enumerate_paths(lp.SCHRODER, n, lp.NONNEG_CONSTRAINT),
        tr.format_leafcolored,
        lambda p: p.steps,
    )
    rec.note(f"schroder number = {sc.schroder_number(n)}")
    return rec.verdict("bijection leafcolored-schroder", n)


def _verify_leafcolored_drt_free_schroder(n: int) -> Verdict:
    rec = _Recorder()
    _certify_pairing(
        rec,
        enumerate_leafcolored_drts(n),
        bj.leafcolored_drt_to_free_schroder,
        bj.free_schroder_to_leafcolored_drt,
        lp.enumerate_paths(lp.SCHRODER, n, lp.FREE_CONSTRAINT),
        tr.format_leafcolored,
        lambda p: p.steps,
    )
    rec.note(f"free schroder count = {sc.free_schroder_count(n)}")
    return rec.verdict("bijection leafcolored-drt-free-schroder", n)


def _verify_chain_tricolored(n: int) -> Verdict:
    rec = _Recorder()
    images = []
    for chain in enumerate_all_chains(n):
        image = bj.chain_to_tricolored(chain)
        whites = sum(1 for c in image.root_child_colors if c == bj.WHITE)
        rec.check(
            whites == chain.size - 1,
            f"white count {whites} != size-1 at {tr.format_chain(chain)}",
        )
        rec.check(
            bj.tricolored_to_chain(image) == tr.Chain(chain.tree, chain.members),
            f"round trip broke at {tr.format_chain(chain)}",
        )
        images.append(image)
    expected = set(enumerate_kcolored(n, 3))
    rec.check(len(set(images)) == len(images), "forward map is not injective")
    rec.check(set(images) == expected, "image is not every tricolored tree")
    rec.check(
        len(images) == sc.chains_count(n),
        f"chain total {len(images)} != series value {sc.chains_count(n)}",
    )
    rec.note(f"objects: {len(images)}")
    return rec.verdict("bijection chain-tricolored", n)


def _verify_colored_chain(n: int, num_colors: int = 2) -> Verdict:
    rec = _Recorder()
    _certify_pairing(
        rec,
        enumerate_colored_chains(n, num_colors),
        lambda c: bj.colored_chain_to_kcolored(c, num_colors),
        bj.kcolored_to_colored_chain,
        enumerate_kcolored(n, num_colors + 2),
        tr.format_chain,
        tr.format_kcolored,
    )
    rec.check(
        kcolored_tree_count(n, num_colors + 2)
        == sum(1 for _ in enumerate_colored_chains(n, num_colors)),
        "colored chain count disagrees with 1/(1-kxC)",
    )
    rec.note(f"chain colors: {num_colors}")
    return rec.verdict("bijection colored-chain-kcolored", n)


BIJECTION_TARGETS: dict[str, Callable[[int], Verdict]] = {
    "glove": _verify_glove,
    "butterfly": _verify_butterfly,
    "drt-free-dyck": _verify_drt_free_dyck,
    "bicolored-free-dyck": _verify_bicolored_free_dyck,
    "drt-bicolored": _verify_drt_bicolored,
    "leafcolored-schroder": _verify_leafcolored_schroder,
    "leafcolored-drt-free-schroder": _verify_leafcolored_drt_free_schroder,
    "chain-tricolored": _verify_chain_tricolored,
    "colored-chain-kcolored": _verify_colored_chain,
}


def verify_bijection(name: str, n: int) -> Verdict:
    try:
        target = BIJECTION_TARGETS[name]
    except KeyError:
        raise DomainError(
            f"unknown bijection {name!r}; known: {', '.join(sorted(BIJECTION_TARGETS))}"
        ) from None
    return target(n)


# ---------------------------------------------------------------------------
# involution targets
# ---------------------------------------------------------------------------

def verify_involution(which: str, n: int) -> Verdict:
    if which == "dyck":
        flip = iv.dyck_flip
        domain = [p for p in lp.enumerate_paths(lp.DYCK, n, lp.FREE_CONSTRAINT)]
        identity_value, expected_identity = iv.signed_block_sum_dyck(n), 0
        unmatched_expected = 0
    elif which == "schroder":
        flip = iv.schroder_flip
        domain = [
            p
            for p in lp.enumerate_paths(lp.SCHRODER, n, lp.FREE_CONSTRAINT)
            if lp.UP in p.steps
        ]
        identity_value, expected_identity = iv.signed_block_sum_schroder(n), 1
        unmatched_expected = 1  # the all-H path sits outside the domain
    else:
        raise DomainError(f"unknown involution {which!r}; known: dyck, schroder")
    if n < 1:
        raise DomainError("involutions need n >= 1")

    rec = _Recorder()
    fixed = 0
    for path in domain:
        image = flip(path)
        if image == path:
            fixed += 1
        rec.check(flip(image) == path, f"not an involution at {path.steps}")
        rec.check(
            lp.flaw_blocks(image) % 2 != lp.flaw_blocks(path) % 2,
            f"parity preserved at {path.steps}",
        )
    rec.check(fixed == 0, f"{fixed} fixed points")
    rec.check(
        identity_value == expected_identity,
        f"identity value {identity_value} != {expected_identity}",
    )
    rec.note(f"paths checked: {len(domain)}")
    rec.note(f"fixed points: {fixed}")
    rec.note(f"unmatched paths outside domain: {unmatched_expected}")
    rec.note(f"identity value: {identity_value}")
    return rec.verdict(f"involution {which}", n)


# ---------------------------------------------------------------------------
# identity targets (each sweeps sizes 1..n, or 0..n where meaningful)
# ---------------------------------------------------------------------------

def _flaw_statistics(alphabet: str, size: int) -> dict[tuple[int, int], int]:
    """Joint (flaws, blocks) counts over all free paths of the given size."""
    stats: dict[tuple[int, int], int] = {}
    for path in lp.enumerate_paths(alphabet, size, lp.FREE_CONSTRAINT):
        d = lp.decompose(path)
        key = (d.flaws, d.flaw_blocks)
        stats[key] = stats.get(key, 0) + 1
    return stats


def _verify_cf(n: int) -> Verdict:
    rec = _Recorder()
    for size in range(n + 1):
        by_flaws: dict[int, int] = {}
        for path in lp.enumerate_paths(lp.DYCK, size, lp.FREE_CONSTRAINT):
            m = lp.flaws(path)
            by_flaws[m] = by_flaws.get(m, 0) + 1
        expected = sc.catalan(size)
        for m in range(size + 1):
            rec.check(
                by_flaws.get(m, 0) == expected,
                f"n={size} m={m}: {by_flaws.get(m, 0)} paths != c_n = {expected}",
            )
        # the labeled route: the vertex labeled m maps to an m-flaw path
        for tree in tr.enumerate_trees(size):
            for m in range(size + 1):
                drt = tr.distinguish_by_label(tree, m)
                rec.check(
                    lp.flaws(bj.drt_to_free_dyck(drt)) == m,
                    f"label {m} of {tr.serialize(tree)} missed its flaw count",
                )
    return rec.verdict("identity cf", n)


def _verify_cf_refined(n: int) -> Verdict:
    rec = _Recorder()
    for size in range(1, n + 1):
        stats = _flaw_statistics(lp.DYCK, size)
        rec.check(
            stats.get((0, 0), 0) == sc.catalan(size),
            f"n={size}: flawless count != c_n",
        )
        for m in range(1, size + 1):
            for k in range(1, m + 1):
                formula = sc.flaw_block_count_dyck(size, m, k)
                rec.check(
                    stats.get((m, k), 0) == formula,
                    f"n={size} m={m} k={k}: {stats.get((m, k), 0)} != {formula}",
                )
        tree_stats: dict[tuple[int, int], int] = {}
        for drt in enumerate_drts(size):
            key = (bj.prefix_edge_count(drt), bj.stem_size(drt))
            tree_stats[key] = tree_stats.get(key, 0) + 1
        rec.check(
            tree_stats == stats,
            f"n={size}: (prefix, stem) distribution differs from (flaws, blocks)",
        )
    return rec.verdict("identity cf-refined", n)


def _verify_schroder_cf(n: int) -> Verdict:
    rec = _Recorder()
    for size in range(1, n + 1):
        weighted: dict[int, int] = {}
        refined: dict[tuple[int, int], int] = {}
        for path in lp.enumerate_paths(lp.SCHRODER, size, lp.FREE_CONSTRAINT):
            d = lp.decompose(path)
            weight = 2 if path.steps.endswith(lp.UP) else 1
            weighted[d.flaws] = weighted.get(d.flaws, 0) + weight
            key = (d.flaws, d.flaw_blocks)
            refined[key] = refined.get(key, 0) + weight
        r_n = sc.schroder_number(size)
        for m in range(size + 1):
            rec.check(
                weighted.get(m, 0) == r_n,
                f"n={size} m={m}: weight {weighted.get(m, 0)} != r_n = {r_n}",
            )
        for m in range(1, size + 1):
            for k in range(1, m + 1):
                formula = sc.flaw_block_weight_schroder(size, m, k)
                rec.check(
                    refined.get((m, k), 0) == formula,
                    f"n={size} m={m} k={k}: weight {refined.get((m, k), 0)} != {formula}",
                )
    return rec.verdict("identity schroder-cf", n)


def _verify_eq9(n: int) -> Verdict:
    rec = _Recorder()
    for size in range(1, n + 1):
        lhs, rhs = sc.identity9_check(size)
        rec.check(lhs == rhs, f"n={size}: {lhs} != {rhs}")
        if size <= 5:
            exhaustive = sum(1 for _ in enumerate_leafcolored_drts(size))
            rec.check(
                exhaustive == lhs,
                f"n={size}: exhaustive leaf-colored count {exhaustive} != {lhs}",
            )
    return rec.verdict("identity eq9", n)


def _verify_eq10(n: int) -> Verdict:
    rec = _Recorder()
    for size in range(1, n + 1):
        value = iv.signed_block_sum_dyck(size)
        rec.check(value == 0, f"n={size}: sum = {value}")
    return rec.verdict("identity eq10", n)


def _verify_eq12(n: int) -> Verdict:
    rec = _Recorder()
    for size in range(1, n + 1):
        value = iv.signed_block_sum_schroder(size)
        rec.check(value == 1, f"n={size}: sum = {value}")
    return rec.verdict("identity eq12", n)


def _verify_narayana(n: int) -> Verdict:
    rec = _Recorder()
    for size in range(1, n + 1):
        by_leaves: dict[int, int] = {}
        for tree in tr.enumerate_trees(size):
            i = len(tr.leaves(tree))
            by_leaves[i] = by_leaves.get(i, 0) + 1
        for i in range(1, size + 1):
            expected = sc.narayana(size, i)
            rec.check(
                by_leaves.get(i, 0) == expected,
                f"n={size} i={i}: {by_leaves.get(i, 0)} trees != {expected}",
            )
    return rec.verdict("identity narayana", n)


def _verify_leaf_half(n: int) -> Verdict:
    rec = _Recorder()
    for size in range(1, n + 1):
        total = sum(len(tr.leaves(tree)) for tree in tr.enumerate_trees(size))
        expected2 = (size + 1) * sc.catalan(size)
        rec.check(
            2 * total == expected2,
            f"n={size}: 2*{total} != (n+1)c_n = {expected2}",
        )
    return rec.verdict("identity leaf-half", n)


IDENTITY_TARGETS: dict[str, Callable[[int], Verdict]] = {
    "cf": _verify_cf,
    "cf-refined": _verify_cf_refined,
    "schroder-cf": _verify_schroder_cf,
    "eq9": _verify_eq9,
    "eq10": _verify_eq10,
    "eq12": _verify_eq12,
    "narayana": _verify_narayana,
    "leaf-half": _verify_leaf_half,
}


def verify_identity(which: str, n: int) -> Verdict:
    try:
        target = IDENTITY_TARGETS[which]
    except KeyError:
        raise DomainError(
            f"unknown identity {which!r}; known: {', '.join(sorted(IDENTITY_TARGETS))}"
        ) from None
    return target(n)


def verify_all(n: int) -> list[Verdict]:
    """Run every verify target at size n (the whole paper, in order)."""
    verdicts = [verify_bijection(name, n) for name in BIJECTION_TARGETS]
    verdicts.append(verify_involution("dyck", n))
    verdicts.append(verify_involution("schroder", n))
    verdicts.extend(verify_identity(name, n) for name in IDENTITY_TARGETS)
    return verdicts


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

def table_chung_feller(n: int) -> list[tuple[int, int]]:
    """Rows (m, exhaustive count of m-flaw free Dyck paths)."""
    counts = {m: 0 for m in range(n + 1)}
    for path in lp.enumerate_paths(lp.DYCK, n, lp.FREE_CONSTRAINT):
        counts[lp.flaws(path)] += 1
    return sorted(counts.items())


def table_flaw_blocks(n: int) -> list[tuple[int, int, int]]:
    """Rows (m, k, closed-form count of m-flaw k-block free Dyck paths)."""
    rows = [(0, 0, sc.catalan(n))]
    for m in range(1, n + 1):
        for k in range(1, m + 1):
            rows.append((m, k, sc.flaw_block_count_dyck(n, m, k)))
    return rows


def table_returns(n: int) -> list[tuple[int, int]]:
    """Rows (k, Dyck paths with k returns to the axis)."""
    return [(k, sc.deutsch_returns(n, k)) for k in range(1, n + 1)]


def table_schroder_cf(n: int) -> list[tuple[int, int]]:
    """Rows (m, exhaustive weighted total of m-flaw free Schroder paths)."""
    counts = {m: 0 for m in range(n + 1)}
    for path in lp.enumerate_paths(lp.SCHRODER, n, lp.FREE_CONSTRAINT):
        counts[lp.flaws(path)] += 2 if path.steps.endswith(lp.UP) else 1
    return sorted(counts.items())
