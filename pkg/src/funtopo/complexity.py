"""Functional complexity of a communication graph.

The information content of an induced subgraph is the sum, over its nodes,
of the binary entropy of the node's interaction probability: the fraction of
the other subset members it can reach within r hops inside the induced
subgraph. Complexity at one scale is the total absolute deviation between
the subset-size profile of average information and the linear reference line
(j/N) * I(full graph); the multi-scale variant averages that total over hop
scales 1..diameter-1.

Averages are taken over connected induced subgraphs by default; the
all-subsets population is available via connected_only=False. An average
over an empty population is defined as 0 bits.
"""
from __future__ import annotations

import math
import os
import random
import statistics
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .functional import FunctionalTopology
from .topology import DisconnectedGraphError

DEFAULT_MAX_EXACT_N = 22
MAX_EXACT_ENV = "FUNTOPO_MAX_EXACT_N"


class BudgetExceededError(Exception):
    """Raised when exact enumeration is requested on too large a graph."""


def _exact_budget() -> int:
    return int(os.environ.get(MAX_EXACT_ENV, str(DEFAULT_MAX_EXACT_N)))


def _check_budget(n: int) -> None:
    budget = _exact_budget()
    if n > budget:
        raise BudgetExceededError(
            f"exact enumeration over {n} nodes exceeds the budget of "
            f"{budget}; use the sampled estimator or raise {MAX_EXACT_ENV}")


def node_entropy(p: float) -> float:
    """Binary entropy H(p) in bits; H(0) = H(1) = 0."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must be in [0, 1], got {p}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -(p * math.log2(p) + (1.0 - p) * math.log2(1.0 - p))


@lru_cache(maxsize=None)
def _entropy_row(denominator: int) -> tuple[float, ...]:
    """H(m / denominator) for m = 0..denominator."""
    return tuple(node_entropy(m / denominator)
                 for m in range(denominator + 1))


@dataclass(frozen=True)
class SubgraphInfo:
    subset: frozenset[int]
    scale: int
    info: float


@dataclass(frozen=True)
class ComplexityProfile:
    """Per-subset-size information profile at one hop scale."""

    scale: int
    full_information: float           # information of the whole graph
    avg_info: dict[int, float]        # j -> average subgraph information
    reference: dict[int, float]       # j -> (j / N) * full_information
    cf: float                         # sum over j of |avg - reference|
    population: str                   # "connected" or "all"
    estimator: str                    # "exact" or "sampled"
    stderr: dict[int, float] | None = None

    def rows(self):
        """(j, avg_info_bits, reference_bits, abs_deviation) per subset size."""
        for j in sorted(self.avg_info):
            avg = self.avg_info[j]
            ref = self.reference[j]
            yield j, avg, ref, abs(avg - ref)


# ---------------------------------------------------------------- primitives

def _subset_mask(g: FunctionalTopology, subset) -> int:
    members = set(subset)
    if len(members) < 1:
        raise ValueError("subset must be non-empty")
    mask = 0
    for v in members:
        if not 0 <= v < g.node_count:
            raise ValueError(f"node {v} outside graph of {g.node_count} nodes")
        mask |= 1 << v
    return mask


def _mask_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _reach_within(masks, start: int, subset_mask: int, r: int) -> int:
    """Number of subset members, other than start, within r hops of start
    in the induced subgraph."""
    reach = 1 << start
    frontier = reach
    for _ in range(r):
        grown = 0
        for w in _mask_bits(frontier):
            grown |= masks[w]
        frontier = grown & subset_mask & ~reach
        if not frontier:
            break
        reach |= frontier
    return reach.bit_count() - 1


def _mask_connected(masks, subset_mask: int) -> bool:
    start = subset_mask & -subset_mask
    reach = start
    frontier = start
    while frontier:
        grown = 0
        for w in _mask_bits(frontier):
            grown |= masks[w]
        frontier = grown & subset_mask & ~reach
        reach |= frontier
    return reach == subset_mask


def interaction_probability(g: FunctionalTopology, node: int, subset,
                            r: int = 1) -> float:
    """Fraction of the other subset members reachable from node within r
    hops of the subgraph induced by subset."""
    if r < 1:
        raise ValueError(f"hop scale must be positive, got {r}")
    mask = _subset_mask(g, subset)
    if mask.bit_count() < 2:
        raise ValueError("subset must hold at least two nodes")
    if not (mask >> node) & 1:
        raise ValueError(f"node {node} is not in the subset")
    count = _reach_within(g.adjacency_masks, node, mask, r)
    return count / (mask.bit_count() - 1)


def subgraph_information(g: FunctionalTopology, subset, r: int = 1) -> float:
    """Information content of the induced subgraph, in bits."""
    if r < 1:
        raise ValueError(f"hop scale must be positive, got {r}")
    mask = _subset_mask(g, subset)
    j = mask.bit_count()
    if j < 2:
        raise ValueError("subset must hold at least two nodes")
    row = _entropy_row(j - 1)
    masks = g.adjacency_masks
    return math.fsum(row[_reach_within(masks, v, mask, r)]
                     for v in sorted(_mask_bits(mask)))


def measure_subgraph(g: FunctionalTopology, subset, r: int = 1) -> SubgraphInfo:
    return SubgraphInfo(subset=frozenset(subset), scale=r,
                        info=subgraph_information(g, subset, r))


def _full_information(g: FunctionalTopology, r: int = 1) -> float:
    """Information of the whole graph, reduced as a reach-count histogram in
    ascending reach order: the value depends only on the reach multiset, and
    it is bit-identical to the enumeration average at subset size N."""
    n = g.node_count
    masks = g.adjacency_masks
    full = (1 << n) - 1
    if r == 1:
        reaches = Counter(g.degrees)
    else:
        reaches = Counter(_reach_within(masks, v, full, r) for v in range(n))
    row = _entropy_row(n - 1)
    return math.fsum(reaches[m] * row[m] for m in sorted(reaches))


# ------------------------------------------------------------- enumeration

def _reach_histograms(g: FunctionalTopology, rmax: int,
                      connected_only: bool, jmax: int | None = None):
    """hist[r][j][m] = how many (subset, member) pairs have exactly m other
    members within r hops, over induced subgraphs of size j; counts[j] = how
    many subgraphs of size j were enumerated.

    Integer histograms make every later float reduction independent of
    enumeration order.
    """
    n = g.node_count
    masks = g.adjacency_masks
    hist = [[Counter() for _ in range(n + 1)] for _ in range(rmax + 1)]
    counts = [0] * (n + 1)
    cap = n if jmax is None else jmax

    def emit(smask: int, size: int) -> None:
        if size < 2:
            return
        counts[size] += 1
        if rmax == 1:
            h1 = hist[1][size]
            for v in _mask_bits(smask):
                h1[(masks[v] & smask).bit_count()] += 1
            return
        for v in _mask_bits(smask):
            reach = 1 << v
            frontier = reach
            count = 0
            for r in range(1, rmax + 1):
                if frontier:
                    grown = 0
                    for w in _mask_bits(frontier):
                        grown |= masks[w]
                    frontier = grown & smask & ~reach
                    reach |= frontier
                    count += frontier.bit_count()
                hist[r][size][count] += 1

    if connected_only:
        def rec(smask: int, size: int, ext: int, seen: int) -> None:
            emit(smask, size)
            if size == cap:
                return
            while ext:
                low = ext & -ext
                ext ^= low
                u = low.bit_length() - 1
                new = masks[u] & allowed & ~seen
                rec(smask | low, size + 1, ext | new, seen | new)

        for v in range(n):
            allowed = ~((1 << v) - 1)
            ext0 = masks[v] & allowed
            rec(1 << v, 1, ext0, (1 << v) | ext0)
    else:
        import itertools
        for size in range(2, cap + 1):
            for combo in itertools.combinations(range(n), size):
                smask = 0
                for v in combo:
                    smask |= 1 << v
                emit(smask, size)
    return hist, counts


def _profile_from_histograms(g: FunctionalTopology, r: int, hist_r, counts,
                             jmin: int, connected_only: bool,
                             estimator: str = "exact",
                             stderr: dict[int, float] | None = None,
                             avg_override: dict[int, float] | None = None,
                             ) -> ComplexityProfile:
    n = g.node_count
    full = _full_information(g, r)
    avg_info: dict[int, float] = {}
    reference: dict[int, float] = {}
    deviations = []
    for j in range(jmin, n + 1):
        if avg_override is not None:
            avg = avg_override[j]
        elif counts[j] == 0:
            avg = 0.0
        else:
            row = _entropy_row(j - 1)
            total = math.fsum(hist_r[j][m] * row[m]
                              for m in sorted(hist_r[j]))
            avg = total / counts[j]
        avg_info[j] = avg
        reference[j] = (j / n) * full
        deviations.append(abs(avg - reference[j]))
    return ComplexityProfile(
        scale=r, full_information=full, avg_info=avg_info,
        reference=reference, cf=math.fsum(deviations),
        population="connected" if connected_only else "all",
        estimator=estimator, stderr=stderr)


# ------------------------------------------------------- average information

def average_information_exact(g: FunctionalTopology, j: int, r: int = 1, *,
                              connected_only: bool = True) -> float:
    """Exact average subgraph information at subset size j and hop scale r."""
    n = g.node_count
    if not 2 <= j <= n:
        raise ValueError(f"subset size must be in 2..{n}, got {j}")
    if r < 1:
        raise ValueError(f"hop scale must be positive, got {r}")
    _check_budget(n)
    if not connected_only and r == 1:
        return _avg_info_all_r1(g, j)
    hist, counts = _reach_histograms(g, r, connected_only, jmax=j)
    if counts[j] == 0:
        return 0.0
    row = _entropy_row(j - 1)
    total = math.fsum(hist[r][j][m] * row[m] for m in sorted(hist[r][j]))
    return total / counts[j]


def _avg_info_all_r1(g: FunctionalTopology, j: int) -> float:
    """Closed form over the all-subsets population at one hop: for each node,
    the count of co-members that are neighbors is hypergeometric in its
    degree."""
    n = g.node_count
    row = _entropy_row(j - 1)
    total_subsets = math.comb(n, j)
    weight: Counter = Counter()
    for d in g.degrees:
        for m in range(0, min(d, j - 1) + 1):
            weight[m] += math.comb(d, m) * math.comb(n - 1 - d, j - 1 - m)
    return math.fsum(weight[m] * row[m] for m in sorted(weight)) / total_subsets


def average_information_sampled(g: FunctionalTopology, j: int, r: int = 1, *,
                                samples: int, seed: int,
                                connected_only: bool = True,
                                ) -> tuple[float, float]:
    """Monte Carlo estimate of the average subgraph information.

    Draws `samples` subsets of size j uniformly at random (with replacement
    across draws). With connected_only, draws inducing a disconnected
    subgraph are rejected, so the kept draws are uniform over connected
    subsets. Returns (mean, standard error); both 0.0 when nothing is kept,
    and the standard error is 0.0 for fewer than two kept draws.
    """
    n = g.node_count
    if not 2 <= j <= n:
        raise ValueError(f"subset size must be in 2..{n}, got {j}")
    if r < 1:
        raise ValueError(f"hop scale must be positive, got {r}")
    if samples < 1:
        raise ValueError(f"sample count must be positive, got {samples}")
    rng = random.Random(seed)
    masks = g.adjacency_masks
    row = _entropy_row(j - 1)
    values = []
    for _ in range(samples):
        smask = 0
        for v in rng.sample(range(n), j):
            smask |= 1 << v
        if connected_only and not _mask_connected(masks, smask):
            continue
        values.append(math.fsum(
            row[_reach_within(masks, v, smask, r)]
            for v in sorted(_mask_bits(smask))))
    if not values:
        return 0.0, 0.0
    mean = math.fsum(values) / len(values)
    if len(values) < 2:
        return mean, 0.0
    return mean, statistics.stdev(values) / math.sqrt(len(values))


# ---------------------------------------------------------------- complexity

def complexity_single_scale(g: FunctionalTopology, *,
                            connected_only: bool = True,
                            estimator: str = "exact",
                            samples: int = 10_000,
                            seed: int = 0) -> ComplexityProfile:
    """One-hop complexity profile: deviation of average subgraph information
    from the linear reference, summed over subset sizes 2..N."""
    n = g.node_count
    if n < 2:
        raise ValueError(f"graph must hold at least 2 nodes, got {n}")
    if estimator not in ("exact", "sampled"):
        raise ValueError(f"unknown estimator {estimator!r}")
    if estimator == "sampled":
        avg: dict[int, float] = {}
        err: dict[int, float] = {}
        for j in range(2, n + 1):
            avg[j], err[j] = average_information_sampled(
                g, j, 1, samples=samples, seed=seed + j,
                connected_only=connected_only)
        return _profile_from_histograms(
            g, 1, None, None, 2, connected_only,
            estimator="sampled", stderr=err, avg_override=avg)
    _check_budget(n)
    if not connected_only:
        avg = {j: _avg_info_all_r1(g, j) for j in range(2, n + 1)}
        return _profile_from_histograms(
            g, 1, None, None, 2, connected_only, avg_override=avg)
    hist, counts = _reach_histograms(g, 1, connected_only)
    return _profile_from_histograms(g, 1, hist[1], counts, 2, connected_only)


def complexity_multi_scale(g: FunctionalTopology, *,
                           connected_only: bool = True,
                           estimator: str = "exact",
                           samples: int = 10_000,
                           seed: int = 0,
                           ) -> tuple[float, tuple[ComplexityProfile, ...]]:
    """Complexity averaged over hop scales r = 1..diameter-1; the profile at
    scale r runs over subset sizes max(2, 1 + r)..N. Returns the averaged
    complexity and the per-scale profiles. A complete graph (diameter 1) has
    no sub-unity scale and scores 0."""
    n = g.node_count
    if n < 2:
        raise ValueError(f"graph must hold at least 2 nodes, got {n}")
    if estimator not in ("exact", "sampled"):
        raise ValueError(f"unknown estimator {estimator!r}")
    diameter = _diameter(g)
    if diameter == 1:
        return 0.0, ()
    scales = range(1, diameter)
    if estimator == "sampled":
        profiles = []
        for r in scales:
            avg: dict[int, float] = {}
            err: dict[int, float] = {}
            for j in range(max(2, 1 + r), n + 1):
                avg[j], err[j] = average_information_sampled(
                    g, j, r, samples=samples, seed=seed + 1000 * r + j,
                    connected_only=connected_only)
            profiles.append(_profile_from_histograms(
                g, r, None, None, max(2, 1 + r), connected_only,
                estimator="sampled", stderr=err, avg_override=avg))
    else:
        _check_budget(n)
        rmax = diameter - 1
        hist, counts = _reach_histograms(g, rmax, connected_only)
        profiles = [
            _profile_from_histograms(g, r, hist[r], counts, max(2, 1 + r),
                                     connected_only)
            for r in scales
        ]
    cf = math.fsum(p.cf for p in profiles) / len(profiles)
    return cf, tuple(profiles)


def _diameter(g: FunctionalTopology) -> int:
    n = g.node_count
    masks = g.adjacency_masks
    full = (1 << n) - 1
    best = 0
    for v in range(n):
        reach = 1 << v
        frontier = reach
        dist = 0
        while reach != full:
            grown = 0
            for w in _mask_bits(frontier):
                grown |= masks[w]
            frontier = grown & ~reach
            if not frontier:
                raise DisconnectedGraphError(
                    "complexity across scales needs a connected graph; "
                    f"node {v} cannot reach every other node")
            reach |= frontier
            dist += 1
        best = max(best, dist)
    return max(best, 1)


# ------------------------------------------------- hub-of-cliques closed form

def single_scale_hub_of_cliques(cluster_sizes) -> ComplexityProfile:
    """Exact connected-population one-hop profile for a graph made of
    disjoint cliques whose first member each links to a shared hub.

    Connected induced subgraphs split into within-clique subsets (complete,
    zero information) and hub-bearing subsets where each participating clique
    must contribute its linked member. Counting both families with small
    polynomials gives the profile in closed form, without enumeration.
    """
    sizes = sorted(cluster_sizes, reverse=True)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("cluster sizes must be positive integers")
    c = len(sizes)
    n = sum(sizes) + 1

    def poly_mul(a: list[int], b: list[int], cap: int) -> list[int]:
        out = [0] * min(cap + 1, len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0 or i > cap:
                continue
            for k, bk in enumerate(b):
                if i + k > cap:
                    break
                out[i + k] += ai * bk
        return out

    cap = n - 1  # sensors used by hub-bearing subsets
    # g_i(x): linked member mandatory, any subset of the others
    gs = []
    for s in sizes:
        m = s - 1
        g = [0] + [math.comb(m, a) for a in range(m + 1)]
        gs.append(g)
    # hub-bearing counts split by number of participating cliques
    by_t: list[list[int]] = [[1]]
    for g in gs:
        grown = [poly_mul(by_t[t], g, cap) for t in range(len(by_t))]
        nxt = [list(by_t[0])]
        for t in range(1, len(by_t) + 1):
            base = by_t[t] if t < len(by_t) else [0]
            add = grown[t - 1]
            width = max(len(base), len(add))
            nxt.append([(base[i] if i < len(base) else 0)
                        + (add[i] if i < len(add) else 0)
                        for i in range(width)])
        by_t = nxt
    # product of (1 + g_l) over all cliques but one, per clique
    ones = [1]
    prefix = [ones]
    for g in gs:
        f = [1] + g[1:]
        prefix.append(poly_mul(prefix[-1], f, cap))
    suffix = [ones] * (c + 1)
    for i in range(c - 1, -1, -1):
        f = [1] + gs[i][1:]
        suffix[i] = poly_mul(suffix[i + 1], f, cap)
    excl = [poly_mul(prefix[i], suffix[i + 1], cap) for i in range(c)]

    degrees = []
    for s in sizes:
        degrees.append(s)                     # linked member also sees the hub
        degrees.extend([s - 1] * (s - 1))
    degrees.append(c)                         # the hub
    row_full = _entropy_row(n - 1)
    full = math.fsum(row_full[d] for d in sorted(degrees))

    avg_info: dict[int, float] = {}
    reference: dict[int, float] = {}
    deviations = []
    for j in range(2, n + 1):
        if j == n:
            # the lone size-N subset is the whole graph
            avg_info[j] = full
            reference[j] = full
            deviations.append(0.0)
            continue
        row = _entropy_row(j - 1)
        clique_count = sum(math.comb(s, j) for s in sizes)
        hub_count = 0
        hub_info_terms = []
        for t in range(1, len(by_t)):
            poly = by_t[t]
            cnt = poly[j - 1] if j - 1 < len(poly) else 0
            if cnt:
                hub_count += cnt
                hub_info_terms.append(cnt * row[t])
        for i, s in enumerate(sizes):
            m = s - 1
            for a in range(0, min(m, j - 2) + 1):
                rest = j - 2 - a
                others = excl[i][rest] if rest < len(excl[i]) else 0
                if not others:
                    continue
                ways = math.comb(m, a) * others
                hub_info_terms.append(ways * (row[1 + a] + a * row[a]))
        total = clique_count + hub_count
        avg = math.fsum(hub_info_terms) / total if total else 0.0
        avg_info[j] = avg
        reference[j] = (j / n) * full
        deviations.append(abs(avg - reference[j]))
    return ComplexityProfile(
        scale=1, full_information=full, avg_info=avg_info,
        reference=reference, cf=math.fsum(deviations),
        population="connected", estimator="exact")
