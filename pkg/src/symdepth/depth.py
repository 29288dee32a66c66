"""Two independent exact depth engines for monomial quotients S/I.

The first engine locates the least nonvanishing local cohomology degree
through the combinatorial complexes attached to multidegrees (Takayama's
formula); the second resolves S/I through multigraded Betti numbers and
applies Auslander-Buchsbaum (depth = n - pd).  ``depth`` can run either
engine or both with an agreement check.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .complexes import SimplicialComplex, mask_of, submasks, vertices_of
from .homology import reduced_homology_from_faces
from .monomial import check_exponents, support


class EngineDisagreement(RuntimeError):
    """Both depth engines ran but returned different values: a bug."""

    def __init__(self, witness_a, witness_b):
        self.witness_a = witness_a
        self.witness_b = witness_b
        super().__init__(
            f"depth engines disagree: takayama={witness_a.depth} "
            f"betti={witness_b.depth}"
        )


@dataclass(frozen=True)
class DegreePair:
    """Positive part of a multidegree plus the set of strictly negative
    coordinates; the negative magnitudes never matter."""

    alpha_plus: tuple
    cosupport: frozenset

    def __post_init__(self):
        if support(self.alpha_plus) & self.cosupport:
            raise ValueError("cosupport must be disjoint from the support of alpha_plus")


@dataclass(frozen=True)
class DepthWitness:
    depth: int
    engine: str
    char: int
    alpha_plus: tuple = None
    cosupport: tuple = None
    homology_index: int = None
    betti_index: int = None
    betti_degree: tuple = None

    def to_dict(self):
        out = {"depth": self.depth, "engine": self.engine, "char": self.char}
        if self.alpha_plus is not None:
            out["alpha_plus"] = list(self.alpha_plus)
            out["cosupport"] = [i + 1 for i in self.cosupport]
            out["homology_index"] = self.homology_index
        if self.betti_index is not None:
            out["betti_index"] = self.betti_index
            out["betti_degree"] = list(self.betti_degree)
        return out


@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers of S/I: {(i, multidegree): value}."""

    n: int
    entries: tuple  # sorted ((i, alpha, value), ...)

    def projective_dimension(self):
        return max(i for i, _, _ in self.entries)

    def total(self):
        """Total Betti numbers {i: sum over multidegrees}."""
        totals = {}
        for i, _, value in self.entries:
            totals[i] = totals.get(i, 0) + value
        return totals

    def to_dict(self):
        return {
            "n": self.n,
            "entries": [
                {"i": i, "degree": list(alpha), "value": value}
                for i, alpha, value in self.entries
            ],
        }


# --------------------------------------------------------------------------
# Takayama engine
# --------------------------------------------------------------------------

def takayama_complex(ideal, pair):
    """The complex whose faces are the localization sets F (disjoint from
    the cosupport) that fail to absorb x^alpha_plus."""
    alpha = check_exponents(pair.alpha_plus, ideal.n)
    cos_mask = mask_of(pair.cosupport)
    free_mask = ((1 << ideal.n) - 1) & ~cos_mask
    faces = [
        f for f in submasks(free_mask)
        if not ideal.localized_contains(alpha, vertices_of(f | cos_mask))
    ]
    return SimplicialComplex.from_face_masks(ideal.n, faces)


_PROFILE_CACHE = {}


def _homology_dims(facets, char):
    """Nonzero reduced homology dims of a facet tuple, memoized; cones are
    recognized and short-circuited."""
    key = (facets, char)
    cached = _PROFILE_CACHE.get(key)
    if cached is not None:
        return cached
    if facets:
        apex = facets[0]
        for f in facets[1:]:
            apex &= f
    else:
        apex = 0
    if facets and apex:
        dims = {}
    else:
        faces = set()
        for f in facets:
            faces.update(submasks(f))
        dims = reduced_homology_from_faces(faces, char)
    _PROFILE_CACHE[key] = dims
    return dims


def _takayama_facets_generic(ideal, alpha, cos_mask, free_mask):
    faces = [
        f for f in submasks(free_mask)
        if not ideal.localized_contains(alpha, vertices_of(f | cos_mask))
    ]
    return SimplicialComplex.from_face_masks(ideal.n, faces).facets


def _takayama_facets_prime_power(n, prime_masks, k, sums, cos_mask, free_mask):
    """Facets when I is an intersection of prime powers: the complex is the
    union of the simplexes on free vertices avoiding each prime whose
    exponent sum falls short of k."""
    facets = []
    for p_mask, s in zip(prime_masks, sums):
        if s < k and not p_mask & cos_mask:
            facets.append(free_mask & ~p_mask)
    maximal = []
    for f in sorted(set(facets), reverse=True):
        if not any(f & g == f for g in maximal):
            maximal.append(f)
    return tuple(sorted(maximal, key=lambda m: (bin(m).count("1"), m)))


@functools.lru_cache(maxsize=None)
def depth_via_takayama(ideal, char=0):
    """Depth of S/I as the least cohomological degree with a nonvanishing
    witness multidegree, searched over the finite exponent box."""
    if ideal.is_unit:
        raise ValueError("depth of the zero module is undefined")
    n = ideal.n
    if ideal.is_zero:
        return DepthWitness(depth=n, engine="takayama", char=char)

    rho = ideal.generator_degree_bounds()
    structure = ideal.prime_structure()
    if structure is not None:
        primes, k = structure
        prime_masks = [mask_of(p) for p in primes]
        prime_vars = [sorted(p) for p in primes]

    best = None  # (i, csize, cosupport tuple, alpha_plus, homology index)
    full_mask = (1 << n) - 1
    for csize in range(0, n + 1):
        if best is not None and best[0] <= csize:
            break
        for cosupport in itertools.combinations(range(n), csize):
            cos_mask = mask_of(cosupport)
            free_mask = full_mask & ~cos_mask
            ranges = [
                range(max(rho[j], 1)) if not cos_mask >> j & 1 else range(1)
                for j in range(n)
            ]
            for alpha in itertools.product(*ranges):
                if structure is not None:
                    sums = [sum(alpha[i] for i in vs) for vs in prime_vars]
                    facets = _takayama_facets_prime_power(
                        n, prime_masks, k, sums, cos_mask, free_mask
                    )
                else:
                    facets = _takayama_facets_generic(
                        ideal, alpha, cos_mask, free_mask
                    )
                dims = _homology_dims(facets, char)
                if not dims:
                    continue
                i = min(dims) + csize + 1
                if best is None or i < best[0]:
                    best = (i, csize, cosupport, alpha, i - csize - 1)
    if best is None:
        raise RuntimeError("no nonvanishing cohomology found; search box bug")
    i, _, cosupport, alpha, h_index = best
    return DepthWitness(
        depth=i,
        engine="takayama",
        char=char,
        alpha_plus=alpha,
        cosupport=cosupport,
        homology_index=h_index,
    )


# --------------------------------------------------------------------------
# Betti engine
# --------------------------------------------------------------------------

def upper_koszul_complex(ideal, alpha):
    """Faces are the subsets F of the support of alpha with x^(alpha-F)
    still inside the ideal."""
    alpha = check_exponents(alpha, ideal.n)
    box = _lcm_exponent(ideal)
    if any(a > b for a, b in zip(alpha, box)):
        raise ValueError(f"degree {alpha} exceeds the lcm box {box}")
    member = _membership_test(ideal)
    faces = [
        f for f in submasks(mask_of(support(alpha)))
        if member(_subtract_mask(alpha, f))
    ]
    return SimplicialComplex.from_face_masks(ideal.n, faces)


def betti_table(ideal, char=0):
    """Multigraded Betti numbers of S/I from reduced homology of the
    upper Koszul complexes over the lcm box."""
    if ideal.is_unit:
        raise ValueError("Betti table of the zero module is undefined")
    n = ideal.n
    entries = {(0, (0,) * n): 1}
    if not ideal.is_zero:
        member = _membership_test(ideal)
        box = _lcm_exponent(ideal)
        for alpha in itertools.product(*(range(b + 1) for b in box)):
            if not member(alpha):
                continue  # void Koszul complex, no contribution
            supp_mask = mask_of(support(alpha))
            faces = [
                f for f in submasks(supp_mask)
                if member(_subtract_mask(alpha, f))
            ]
            facets = SimplicialComplex.from_face_masks(n, faces).facets
            for h, dim in _homology_dims(facets, char).items():
                key = (h + 2, alpha)
                entries[key] = entries.get(key, 0) + dim
    return BettiTable(
        n, tuple(sorted((i, a, v) for (i, a), v in entries.items()))
    )


@functools.lru_cache(maxsize=None)
def depth_via_betti(ideal, char=0):
    """Depth via Auslander-Buchsbaum: n minus the projective dimension."""
    if ideal.is_unit:
        raise ValueError("depth of the zero module is undefined")
    n = ideal.n
    if ideal.is_zero:
        return DepthWitness(depth=n, engine="betti", char=char)
    table = betti_table(ideal, char)
    pd = table.projective_dimension()
    degree = min(a for i, a, _ in table.entries if i == pd)
    return DepthWitness(
        depth=n - pd,
        engine="betti",
        char=char,
        betti_index=pd,
        betti_degree=degree,
    )


def _lcm_exponent(ideal):
    return ideal.generator_degree_bounds()


def _subtract_mask(alpha, mask):
    return tuple(a - (mask >> i & 1) for i, a in enumerate(alpha))


def _membership_test(ideal):
    structure = ideal.prime_structure()
    if structure is None:
        return lambda u: ideal.contains(u)
    primes, k = structure
    prime_vars = [sorted(p) for p in primes]

    def member(u):
        return all(a >= 0 for a in u) and all(
            sum(u[i] for i in vs) >= k for vs in prime_vars
        )

    return member


# --------------------------------------------------------------------------
# Front end
# --------------------------------------------------------------------------

def depth(ideal, engine="cross_check", char=0):
    """Depth of S/I with the chosen engine; ``cross_check`` runs both and
    raises EngineDisagreement when the values differ."""
    if engine == "takayama":
        return depth_via_takayama(ideal, char)
    if engine == "betti":
        return depth_via_betti(ideal, char)
    if engine == "cross_check":
        a = depth_via_takayama(ideal, char)
        b = depth_via_betti(ideal, char)
        if a.depth != b.depth:
            raise EngineDisagreement(a, b)
        return a
    raise ValueError(f"unknown depth engine {engine!r}")
