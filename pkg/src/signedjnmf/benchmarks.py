"""Synthetic signed benchmark graphs with planted community structure.

Two families are provided: an SG planted-partition graph (equal community
sizes, Bernoulli wiring) and a signed LFR graph (power-law degrees and
community sizes, configuration-model wiring). Both start from the clean
sign convention -- positive inside communities, negative between them --
and then corrupt signs with the two noise fractions p_plus / p_minus.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import GenerationError, ParameterError
from .graph import SignedGraph
from .partition import Partition


@dataclass(frozen=True)
class SgConfig:
    """Planted-partition generator parameters.

    c communities of n nodes each; k is the expected node degree and p_in
    the expected fraction of a node's links that stay internal. p_plus is
    the fraction of inter-community links made positive, p_minus the
    fraction of intra-community links made negative.
    """

    c: int
    n: int
    k: float
    p_in: float
    p_plus: float = 0.0
    p_minus: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.c < 1 or self.n < 2:
            raise ParameterError("need c >= 1 communities and n >= 2 nodes per community")
        for name in ("p_in", "p_plus", "p_minus"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ParameterError(f"{name}={v} outside [0, 1]")
        if self.k <= 0 or self.k >= self.c * self.n:
            raise ParameterError(f"average degree k={self.k} infeasible for {self.c * self.n} nodes")
        if self.k * self.p_in > self.n - 1:
            raise ParameterError("internal degree k*p_in exceeds community capacity n-1")
        if self.c == 1 and self.k * (1 - self.p_in) > 0:
            raise ParameterError("c=1 admits no external links; set p_in=1")
        if self.c > 1 and self.k * (1 - self.p_in) > self.n * (self.c - 1):
            raise ParameterError("external degree exceeds capacity n*(c-1)")


@dataclass(frozen=True)
class SlfrConfig:
    """Signed LFR generator parameters.

    Degrees follow a power law with exponent lambda1 truncated to
    [k_min, k_max] (k_min solved to hit mean k_avg); community sizes follow
    a power law with exponent lambda2 truncated to [s_min, s_max]. mu is
    the expected fraction of each node's edges leaving its community.
    """

    n: int
    k_avg: float
    k_max: int
    lambda1: float
    lambda2: float
    s_min: int
    s_max: int
    mu: float
    p_plus: float = 0.0
    p_minus: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ParameterError("need n >= 2")
        if not 1 <= self.s_min <= self.s_max <= self.n:
            raise ParameterError("require 1 <= s_min <= s_max <= n")
        if not 0.0 <= self.mu <= 1.0:
            raise ParameterError(f"mu={self.mu} outside [0, 1]")
        if not 0 < self.k_avg <= self.k_max:
            raise ParameterError("require 0 < k_avg <= k_max")
        if self.lambda1 <= 0 or self.lambda2 <= 0:
            raise ParameterError("power-law exponents must be positive")
        for name in ("p_plus", "p_minus"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ParameterError(f"{name}={v} outside [0, 1]")


@dataclass(frozen=True)
class LabeledGraph:
    """A generated graph together with its ground-truth partition."""

    graph: SignedGraph
    truth: Partition


def generate_sg(cfg: SgConfig) -> LabeledGraph:
    """Generate a planted-partition signed graph with c equal communities.

    Each intra-community pair is linked with probability k*p_in/(n-1) and
    each inter-community pair with probability k*(1-p_in)/(n*(c-1)), which
    realizes the expected degree k and internal fraction p_in. Links are
    +1 inside and -1 between communities before noise.
    """
    rng = np.random.default_rng(cfg.seed)
    total = cfg.c * cfg.n
    labels = np.repeat(np.arange(cfg.c), cfg.n)
    same = labels[:, None] == labels[None, :]
    p_intra = cfg.k * cfg.p_in / (cfg.n - 1)
    p_inter = cfg.k * (1 - cfg.p_in) / (cfg.n * (cfg.c - 1)) if cfg.c > 1 else 0.0
    upper = np.triu(np.ones((total, total), dtype=bool), k=1)
    edge = upper & (rng.random((total, total)) < np.where(same, p_intra, p_inter))
    a = np.where(edge, np.where(same, 1.0, -1.0), 0.0)
    a = a + a.T
    labeled = LabeledGraph(SignedGraph(a), Partition.from_labels(labels))
    return apply_sign_noise(labeled, cfg.p_plus, cfg.p_minus, rng)


def apply_sign_noise(g: LabeledGraph, p_plus: float, p_minus: float, rng) -> LabeledGraph:
    """Corrupt edge signs without touching the topology.

    Every inter-community edge turns positive independently with
    probability p_plus; every intra-community edge turns negative with
    probability p_minus. Magnitudes are preserved.
    """
    a = np.array(g.graph.adjacency)
    lab = g.truth.assignment
    same = lab[:, None] == lab[None, :]
    upper = np.triu(np.ones_like(a, dtype=bool), k=1)
    edge = (a != 0) & upper
    hit = rng.random(a.shape)
    flip_neg = edge & same & (hit < p_minus)
    flip_pos = edge & ~same & (hit < p_plus)
    mag = np.abs(a)
    a = np.where(flip_neg, -mag, a)
    a = np.where(flip_pos, mag, a)
    a = np.triu(a, k=1)
    a = a + a.T
    return LabeledGraph(SignedGraph(a, g.graph.node_labels), g.truth)


# --- signed LFR construction -------------------------------------------------


def _truncated_powerlaw(exponent: float, lo: int, hi: int):
    """Support values and pmf of a discrete power law on [lo, hi]."""
    ks = np.arange(lo, hi + 1, dtype=float)
    w = ks ** (-exponent)
    return ks.astype(int), w / w.sum()


def _solve_min_degree(exponent: float, k_avg: float, k_max: int) -> int:
    """Smallest-degree cutoff whose truncated power-law mean is closest to k_avg."""
    best_lo, best_gap = 1, float("inf")
    for lo in range(1, k_max + 1):
        ks, p = _truncated_powerlaw(exponent, lo, k_max)
        gap = abs(float((ks * p).sum()) - k_avg)
        if gap < best_gap:
            best_lo, best_gap = lo, gap
    return best_lo


def _sample_community_sizes(rng, cfg: SlfrConfig, max_tries: int = 5000) -> list[int]:
    ks, p = _truncated_powerlaw(cfg.lambda2, cfg.s_min, cfg.s_max)
    for _ in range(max_tries):
        sizes, tot = [], 0
        while tot < cfg.n:
            s = int(rng.choice(ks, p=p))
            sizes.append(s)
            tot += s
        if tot == cfg.n:
            return sizes
    raise GenerationError(
        f"no community-size partition of n={cfg.n} within [{cfg.s_min}, {cfg.s_max}] "
        f"after {max_tries} tries"
    )


def _assign_members(rng, internal_degree: np.ndarray, sizes: list[int]) -> np.ndarray:
    """Place each node in a community large enough for its internal degree."""
    n = len(internal_degree)
    n_comm = len(sizes)
    if np.any(internal_degree >= max(sizes)):
        raise GenerationError(
            "a node's internal degree exceeds every community size; "
            "raise s_max, mu, or lower the degree cap"
        )
    members: list[set] = [set() for _ in range(n_comm)]
    free = list(range(n))
    for _ in range(50 * n * max(1, n_comm)):
        if not free:
            labels = np.empty(n, dtype=int)
            for ci, group in enumerate(members):
                for v in group:
                    labels[v] = ci
            return labels
        v = free.pop()
        ci = int(rng.integers(n_comm))
        if internal_degree[v] < sizes[ci]:
            members[ci].add(v)
        else:
            free.append(v)
        if len(members[ci]) > sizes[ci]:
            free.append(members[ci].pop())
    raise GenerationError("could not assign nodes to communities within bounded retries")


def _pair_stubs(rng, stubs: np.ndarray, labels: np.ndarray, n: int, taken: set,
                want_internal: bool, rounds: int = 40):
    """Randomly pair stubs, rejecting self-loops, duplicate edges, and pairs
    on the wrong side of the community boundary. Returns edges and leftovers."""
    edges = []
    stubs = np.asarray(stubs)
    for _ in range(rounds):
        if len(stubs) < 2:
            break
        rng.shuffle(stubs)
        odd = stubs[-1:] if len(stubs) % 2 else stubs[:0]
        paired = stubs[: len(stubs) - len(odd)]
        u, v = paired[0::2], paired[1::2]
        bad = u == v
        if want_internal:
            bad |= labels[u] != labels[v]
        else:
            bad |= labels[u] == labels[v]
        keys = np.minimum(u, v) * n + np.maximum(u, v)
        order = np.argsort(keys, kind="stable")
        dup = np.zeros(len(keys), dtype=bool)
        dup[order] = np.concatenate([[False], keys[order][1:] == keys[order][:-1]])
        bad |= dup
        bad |= np.fromiter((int(k) in taken for k in keys), bool, len(keys))
        for uu, vv, kk in zip(u[~bad], v[~bad], keys[~bad]):
            taken.add(int(kk))
            edges.append((int(uu), int(vv)))
        stubs = np.concatenate([u[bad], v[bad], odd])
    return edges, stubs


def _patch_leftovers(rng, leftovers: np.ndarray, labels: np.ndarray, n: int, taken: set,
                     want_internal: bool, edges: list, tries_per_stub: int = 40):
    """Give leftover stubs a last chance by sampling fresh partners directly."""
    counts = np.bincount(leftovers, minlength=n) if len(leftovers) else np.zeros(n, dtype=int)
    nodes = np.where(counts > 0)[0]
    for v in nodes:
        for _ in range(int(counts[v]) * tries_per_stub):
            if counts[v] <= 0:
                break
            u = int(rng.integers(n))
            if u == v:
                continue
            if want_internal != (labels[u] == labels[v]):
                continue
            key = min(u, v) * n + max(u, v)
            if key in taken:
                continue
            taken.add(key)
            edges.append((v, u))
            counts[v] -= 1


def generate_slfr(cfg: SlfrConfig) -> LabeledGraph:
    """Generate a signed LFR benchmark graph.

    Pipeline: sample a truncated power-law degree sequence, sample
    community sizes summing to n, assign nodes to communities that can
    accommodate their internal degree, then wire internal and external
    stubs by configuration-model matching with rejection of self-loops and
    multi-edges. Base signs are intra-positive / inter-negative; sign noise
    is applied last.
    """
    rng = np.random.default_rng(cfg.seed)
    k_min = _solve_min_degree(cfg.lambda1, cfg.k_avg, cfg.k_max)
    ks, p = _truncated_powerlaw(cfg.lambda1, k_min, cfg.k_max)
    degrees = rng.choice(ks, size=cfg.n, p=p)
    sizes = _sample_community_sizes(rng, cfg)
    internal_degree = np.rint(degrees * (1 - cfg.mu)).astype(int)
    labels = _assign_members(rng, internal_degree, sizes)
    external_degree = degrees - internal_degree

    taken: set = set()
    edges: list = []
    for ci in range(len(sizes)):
        group = np.where(labels == ci)[0]
        stubs = np.repeat(group, internal_degree[group])
        got, left = _pair_stubs(rng, stubs, labels, cfg.n, taken, want_internal=True)
        edges.extend(got)
        _patch_leftovers(rng, left, labels, cfg.n, taken, True, edges)
    stubs = np.repeat(np.arange(cfg.n), external_degree)
    got, left = _pair_stubs(rng, stubs, labels, cfg.n, taken, want_internal=False)
    edges.extend(got)
    _patch_leftovers(rng, left, labels, cfg.n, taken, False, edges)

    a = np.zeros((cfg.n, cfg.n))
    for u, v in edges:
        sign = 1.0 if labels[u] == labels[v] else -1.0
        a[u, v] = a[v, u] = sign

    _rewire_to_mixing(rng, a, labels, cfg.mu)

    labeled = LabeledGraph(SignedGraph(a), Partition.from_labels(labels))
    return apply_sign_noise(labeled, cfg.p_plus, cfg.p_minus, rng)


def _rewire_to_mixing(rng, a: np.ndarray, labels: np.ndarray, mu: float,
                      tolerance: float = 0.02, budget: int = 20000) -> None:
    """Nudge the realized external-edge fraction to within `tolerance` of mu
    by degree-preserving double-edge swaps. Modifies `a` in place."""
    if mu in (0.0, 1.0):
        return
    iu, ju = np.nonzero(np.triu(a, 1))
    edges = list(zip(iu.tolist(), ju.tolist()))
    if not edges:
        return
    n_ext = int((labels[iu] != labels[ju]).sum())
    total = len(edges)
    for _ in range(budget):
        frac = n_ext / total
        if abs(frac - mu) <= tolerance:
            return
        need_more_external = frac < mu
        e1, e2 = rng.integers(total), rng.integers(total)
        x1, y1 = edges[e1]
        x2, y2 = edges[e2]
        if len({x1, y1, x2, y2}) < 4:
            continue
        # swap (x1,y1),(x2,y2) -> (x1,y2),(x2,y1), keeping degrees
        p1, p2 = (x1, y2), (x2, y1)
        if a[p1] != 0 or a[p2] != 0:
            continue
        before = int(labels[x1] != labels[y1]) + int(labels[x2] != labels[y2])
        after = int(labels[p1[0]] != labels[p1[1]]) + int(labels[p2[0]] != labels[p2[1]])
        gain = after - before if need_more_external else before - after
        if gain <= 0:
            continue
        a[x1, y1] = a[y1, x1] = 0.0
        a[x2, y2] = a[y2, x2] = 0.0
        for idx, (u, v) in ((e1, p1), (e2, p2)):
            sign = 1.0 if labels[u] == labels[v] else -1.0
            a[u, v] = a[v, u] = sign
            edges[idx] = (min(u, v), max(u, v))
        n_ext += after - before
