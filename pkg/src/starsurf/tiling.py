"""The plane motion group of the star tiling and its desk-scale checks.

Translations: tau_k shifts by 2 u_k where u_k = apothem * eps^{3k} and the
apothem (center-to-edge-line distance of the star) is exactly 1/2.  The
eps^{3k} spacing is what makes the index law

    tau_{(k+2l) mod 5} o R^l = R^l o tau_k

hold exactly, since R^l u_k = u_{(k+2l) mod 5}.  The full motion group is
generated by the dihedral rotations/reflections about the star center
together with these translations; elements act as z -> R^j U^l z + t.

The checks here are sampled, word-length-bounded shadows of the structural
claims: vertex-set invariance, freeness on generic points, transitivity on
star copies, disk coverage, and the fundamental-domain property.  The
translation group contains golden-ratio contractions (tau_0 tau_1 tau_4
shifts by -1/phi), so it is not discrete: interior carriers are generally
non-unique, and the checks report every carrier they find.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from functools import lru_cache

from .geometry import EPSILON, StarPolygon, TOL_GEO, build_star, point_location
from .quotient import build_reflections, edge_pairing


class CheckFailure(AssertionError):
    """A sampled structural check found a counterexample."""


def apothem(star: StarPolygon | None = None, tol: float = 1e-12) -> float:
    """Distance from the center to the star's edge lines; all five agree."""
    if star is None:
        star = build_star()
    dists = [line.distance(star.center) for line in star.edge_lines]
    lo, hi = min(dists), max(dists)
    if hi - lo > tol:
        raise CheckFailure(f"edge-line distances disagree: {dists}")
    return sum(dists) / len(dists)


def u_vector(k: int) -> complex:
    """u_k = apothem * eps^{3k mod 5}: |2 u_k| = 1."""
    return apothem() * EPSILON ** ((3 * k) % 5)


@dataclass(frozen=True)
class MotionGroupElement:
    """(R^j U^l, t): z -> eps^j * (conj z if l else z) + t."""

    j: int = 0
    ell: int = 0
    t: complex = 0.0 + 0.0j

    def __post_init__(self):
        object.__setattr__(self, "j", self.j % 5)
        object.__setattr__(self, "ell", self.ell % 2)

    def __call__(self, z: complex) -> complex:
        w = z.conjugate() if self.ell else z
        return EPSILON ** self.j * w + self.t

    @property
    def is_identity(self) -> bool:
        return self.j == 0 and self.ell == 0 and abs(self.t) < 1e-12

    def inverse(self) -> "MotionGroupElement":
        if self.ell:
            # (R^j U)^{-1} = R^j U with translation -(R^j U)(t)... solved below
            return MotionGroupElement(self.j, 1,
                                      -(EPSILON ** self.j * self.t.conjugate()))
        return MotionGroupElement(-self.j % 5, 0,
                                  -(EPSILON ** (-self.j % 5) * self.t))


def identity() -> MotionGroupElement:
    return MotionGroupElement()


def tau(k: int) -> MotionGroupElement:
    """Pure translation by 2 u_k."""
    if not 0 <= k < 5:
        raise ValueError("k must be in 0..4")
    return MotionGroupElement(0, 0, 2 * u_vector(k))


def rotation(j: int = 1) -> MotionGroupElement:
    return MotionGroupElement(j, 0, 0.0)


def reflection_u() -> MotionGroupElement:
    return MotionGroupElement(0, 1, 0.0)


def multiply(g1: MotionGroupElement, g2: MotionGroupElement) -> MotionGroupElement:
    """Composition g1 after g2 as affine maps.

    The rotation part is R^{j1+j2} when l1 is even and R^{j1-j2} when l1 is
    odd; the translation part is R^{j1} U^{l1}(t2) + t1.
    """
    j = (g1.j + g2.j) % 5 if g1.ell == 0 else (g1.j - g2.j) % 5
    ell = (g1.ell + g2.ell) % 2
    t2 = g2.t.conjugate() if g1.ell else g2.t
    return MotionGroupElement(j, ell, EPSILON ** g1.j * t2 + g1.t)


@dataclass(frozen=True)
class TilingPatch:
    """Star copies reachable by translation words of bounded length.

    centers[i] is the center of copy i; words[i] its defining integer
    vector (l_0..l_4) with center = 2 sum l_k u_k; inverse letters are
    included so the patch surrounds the origin.  vpoints collects the
    centers and the translated star vertices.
    """

    depth: int
    centers: tuple[complex, ...]
    words: tuple[tuple[int, ...], ...]
    vpoints: tuple[complex, ...]

    def word_of_center(self, c: complex, tol: float = 1e-9) -> tuple[int, ...]:
        for center, word in zip(self.centers, self.words):
            if abs(center - c) < tol:
                return word
        raise KeyError(c)


def _lattice_words(depth: int, include_inverses: bool = True):
    rng = range(-depth, depth + 1) if include_inverses else range(depth + 1)
    for word in itertools.product(rng, repeat=5):
        if sum(abs(l) for l in word) <= depth:
            yield word


def generate_patch(depth: int, include_inverses: bool = True,
                   star: StarPolygon | None = None) -> TilingPatch:
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if depth > 6:
        raise ValueError("desk-scale patches stop at depth 6")
    if star is None:
        star = build_star()
    two_u = [2 * u_vector(k) for k in range(5)]
    seen: dict[tuple[int, int], tuple[complex, tuple[int, ...]]] = {}
    for word in _lattice_words(depth, include_inverses):
        c = sum(l * v for l, v in zip(word, two_u))
        key = (round(c.real * 1e9), round(c.imag * 1e9))
        old = seen.get(key)
        if old is None or sum(map(abs, word)) < sum(map(abs, old[1])):
            seen[key] = (c, word)
    items = sorted(seen.values(), key=lambda cw: (abs(cw[0]), cw[0].real, cw[0].imag))
    centers = tuple(c for c, _ in items)
    words = tuple(w for _, w in items)

    vset: dict[tuple[int, int], complex] = {}
    for c in centers:
        for v in (0.0,) + star.vertices:
            p = c + v
            vset[(round(p.real * 1e9), round(p.imag * 1e9))] = p
    vpoints = tuple(sorted(vset.values(), key=lambda p: (abs(p), p.real, p.imag)))
    return TilingPatch(depth=depth, centers=centers, words=words, vpoints=vpoints)


def copies_containing(z: complex, patch: TilingPatch,
                      star: StarPolygon | None = None,
                      tol: float = TOL_GEO) -> list[int]:
    """Indices of patch copies whose closed star contains z."""
    if star is None:
        star = build_star()
    out = []
    for i, c in enumerate(patch.centers):
        if abs(z - c) > 1.7:  # outside the circumradius, cheap reject
            continue
        if point_location(z - c, star, tol).kind != "exterior":
            out.append(i)
    return out


def _group_elements(word_length: int, with_reflections: bool,
                    translations: list[tuple[complex, int, tuple[int, ...]]]):
    """Elements (j, ell, t) with rotation letters + translation letters <= L."""
    for j in range(5):
        rot_cost = min(j, 5 - j)
        ells = (0, 1) if with_reflections else (0,)
        for ell in ells:
            budget = word_length - rot_cost - ell
            if budget < 0:
                continue
            for t, cost, _word in translations:
                if cost <= budget:
                    yield MotionGroupElement(j, ell, t)


def _translation_values(word_length: int) -> list[tuple[complex, int, tuple[int, ...]]]:
    """Distinct translation values with their cost and a witnessing word."""
    two_u = [2 * u_vector(k) for k in range(5)]
    best: dict[tuple[int, int], tuple[complex, int, tuple[int, ...]]] = {}
    for word in _lattice_words(word_length):
        c = sum(l * v for l, v in zip(word, two_u))
        cost = sum(map(abs, word))
        key = (round(c.real * 1e9), round(c.imag * 1e9))
        if key not in best or cost < best[key][1]:
            best[key] = (c, cost, word)
    return list(best.values())


def _word_rotate(word: tuple[int, ...], j: int) -> tuple[int, ...]:
    """Index action of R^j on lattice words: R u_k = u_{(k+2) mod 5}."""
    out = [0] * 5
    for k, l in enumerate(word):
        out[(k + 2 * j) % 5] += l
    return tuple(out)


def _word_conjugate(word: tuple[int, ...]) -> tuple[int, ...]:
    """Index action of U: U u_k = u_{(-k) mod 5}."""
    out = [0] * 5
    for k, l in enumerate(word):
        out[(-k) % 5] += l
    return tuple(out)


def invariance_freeness_checks(samples: int = 200, seed: int = 0,
                               word_length: int = 8, depth: int = 3,
                               element_sample: int = 40) -> dict:
    """Sampled invariance, freeness, and transitivity checks.

    - invariance: group images of sampled vpoints stay in the (enlarged)
      vpoint set;
    - freeness: no sampled generic point is fixed by a nonidentity element
      (translation lookups make this exact over the whole word ball);
    - transitivity: every pair of sampled star copies is joined by an
      explicit translation word.
    Raises CheckFailure with a witness on any counterexample.
    """
    rng = random.Random(seed)
    star = build_star()
    patch = generate_patch(depth)

    translations = _translation_values(word_length)
    word_of_t = {(round(t.real * 1e9), round(t.imag * 1e9)): w
                 for t, _c, w in translations}
    elements = list(_group_elements(word_length, True, translations))
    rng.shuffle(elements)
    elements = [g for g in elements if not g.is_identity][:element_sample]

    # V+ membership with an exact witness: a vpoint is lattice + base vertex,
    # the group permutes the base vertices and acts on lattice words by the
    # index laws, so the image's representation is reconstructed and checked.
    base_vertices = (0.0 + 0.0j,) + star.vertices
    two_u = [2 * u_vector(k) for k in range(5)]

    def lattice_point(word: tuple[int, ...]) -> complex:
        return sum(l * v for l, v in zip(word, two_u))

    # the rotation and the reflection both permute the base vertex set
    for gen in (lambda z: EPSILON * z, lambda z: z.conjugate()):
        for v in base_vertices:
            if not any(abs(gen(v) - w) < 1e-12 for w in base_vertices):
                raise CheckFailure(f"base vertex set is not symmetric at {v}")

    vsamples = [(rng.randrange(len(patch.centers)), rng.randrange(len(base_vertices)))
                for _ in range(samples)]
    checked = 0
    for g in elements:
        gt_key = (round(g.t.real * 1e9), round(g.t.imag * 1e9))
        t_word = word_of_t[gt_key]
        for ci, bi in vsamples:
            v = patch.centers[ci] + base_vertices[bi]
            w = g(v)
            # image word: rotate/conjugate the center word, add the element's
            cword = patch.words[ci]
            if g.ell:
                cword = _word_conjugate(cword)
            cword = _word_rotate(cword, g.j)
            word = tuple(a + b for a, b in zip(cword, t_word))
            base_img = EPSILON ** g.j * (base_vertices[bi].conjugate()
                                         if g.ell else base_vertices[bi])
            vb = min(base_vertices, key=lambda b: abs(b - base_img))
            predicted = lattice_point(word) + vb
            if abs(w - predicted) > 1e-9:
                raise CheckFailure(f"invariance: {g} maps vpoint {v} to {w}, "
                                   f"not a V+ point")
            checked += 1

    # freeness: z fixed by (R^j U^l, t) iff t = z - R^j U^l z; exact lookup
    tkeys = {(round(t.real * 1e9), round(t.imag * 1e9)) for t, _c, _w in translations}
    fixers = 0
    for _ in range(samples):
        z = complex(rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2))
        if any(abs(z - p) < 1e-6 for p in patch.vpoints):
            continue
        for j in range(5):
            for ell in (0, 1):
                base = EPSILON ** j * (z.conjugate() if ell else z)
                t_needed = z - base
                if j == 0 and ell == 0:
                    continue  # identity rotation: t must be 0, excluded below
                key = (round(t_needed.real * 1e9), round(t_needed.imag * 1e9))
                if key in tkeys:
                    g = MotionGroupElement(j, ell, t_needed)
                    if abs(g(z) - z) < 1e-12:
                        raise CheckFailure(f"freeness: {g} fixes {z}")
        fixers += 1

    # transitivity: translation word between sampled copy pairs
    pairs = [(rng.randrange(len(patch.centers)), rng.randrange(len(patch.centers)))
             for _ in range(min(samples, 50))]
    for i0, i1 in pairs:
        w0, w1 = patch.words[i0], patch.words[i1]
        word = tuple(b - a for a, b in zip(w0, w1))
        shift = sum(l * 2 * u_vector(k) for k, l in enumerate(word))
        if abs(patch.centers[i0] + shift - patch.centers[i1]) > 1e-9:
            raise CheckFailure(f"transitivity: word {word} fails for {i0}->{i1}")

    # discreteness shadow of properness: orbit points of a sample under the
    # element list keep a positive minimum pairwise distance
    z0 = 0.31 + 0.17j
    orbit = sorted({(round(g(z0).real, 9), round(g(z0).imag, 9)) for g in elements})
    min_gap = min((math.dist(p, q) for p, q in zip(orbit, orbit[1:])), default=1.0)

    return {
        "invariance_checked": checked,
        "freeness_samples": fixers,
        "transitivity_pairs": len(pairs),
        "orbit_min_gap": min_gap,
        "elements": len(elements),
    }


@lru_cache(maxsize=4)
def fundamental_domain_check(samples: int = 200, seed: int = 0,
                             word_length: int = 8, depth: int = 3,
                             disk_radius: float = 0.9) -> dict:
    """Carrier search into the closed star for sampled plane points.

    For each sample z (off the vertex set) every rotation-translation
    element g with g(z) in the closed punctured star is collected.  Reports
    existence (every sample has a carrier) and the number of distinct
    interior images; boundary samples are checked to have exactly the two
    edge-pairing representatives x and T_m(x).

    The translation group is non-discrete, so several carriers with
    distinct interior images exist for generic samples; interior_unique
    records how many samples had exactly one.
    """
    rng = random.Random(seed)
    star = build_star()
    patch = generate_patch(depth)
    translations = _translation_values(word_length)
    refl = build_reflections()
    pairing = edge_pairing(star)
    pair_m = {}
    for (e0, e1), m in zip(pairing.pairs, pairing.reflection_of_pair):
        pair_m[e0] = m
        pair_m[e1] = m

    def carriers(z: complex) -> list[tuple[MotionGroupElement, complex]]:
        found = []
        for j in range(5):
            base = EPSILON ** j * z
            for t, _cost, _word in translations:
                w = base + t
                if abs(w) > 1.7:
                    continue
                loc = point_location(w, star)
                if loc.kind not in ("exterior", "center"):
                    found.append((MotionGroupElement(j, 0, t), w))
        return found

    existence_fail = []
    interior_unique = 0
    interior_multi = 0
    multiplicities = []
    for _ in range(samples):
        z = complex(rng.uniform(-disk_radius, disk_radius),
                    rng.uniform(-disk_radius, disk_radius))
        if abs(z) > disk_radius or any(abs(z - p) < 1e-6 for p in patch.vpoints):
            continue
        got = carriers(z)
        if not got:
            existence_fail.append(z)
            continue
        images = []
        for _g, w in got:
            if point_location(w, star).kind == "interior":
                if not any(abs(w - im) < 1e-9 for im in images):
                    images.append(w)
        multiplicities.append(len(images))
        if len(images) == 1:
            interior_unique += 1
        elif len(images) > 1:
            interior_multi += 1

    if existence_fail:
        raise CheckFailure(f"no carrier found for {existence_fail[:3]} ...")

    # boundary samples: the two representatives are related by the pairing
    boundary_ok = 0
    for eid in range(10):
        p, q = star.edge_endpoints(eid)
        x = p + rng.uniform(0.2, 0.8) * (q - p)
        y = refl[pair_m[eid]](x)
        if point_location(y, star).kind != "edge":
            raise CheckFailure(f"pairing image of {x} is not a boundary point")
        boundary_ok += 1

    return {
        "samples": len(multiplicities),
        "existence_failures": 0,
        "interior_unique": interior_unique,
        "interior_multi": interior_multi,
        "max_multiplicity": max(multiplicities) if multiplicities else 0,
        "boundary_pairs_checked": boundary_ok,
    }


def coverage_check(samples: int = 500, seed: int = 1, depth: int = 3,
                   disk_radius: float = 0.9) -> dict:
    """Sampled points of the disk (away from V+) land in >= 1 star copy."""
    rng = random.Random(seed)
    star = build_star()
    patch = generate_patch(depth)
    misses = []
    tested = 0
    while tested < samples:
        z = complex(rng.uniform(-disk_radius, disk_radius),
                    rng.uniform(-disk_radius, disk_radius))
        if abs(z) > disk_radius:
            continue
        if any(abs(z - p) < 1e-6 for p in patch.vpoints):
            continue
        tested += 1
        if not copies_containing(z, patch, star):
            misses.append(z)
    if misses:
        raise CheckFailure(f"{len(misses)} uncovered points, e.g. {misses[:3]}")
    return {"tested": tested, "misses": 0}
