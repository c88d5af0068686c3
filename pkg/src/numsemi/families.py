"""Three multiplicity-6 families of symmetric semigroups, indexed by tau >= 1.

    family 1: <6, 3+6t, 4+6t, 7+6t, 8+6t>
    family 2: <6, 7+6t, 8+6t, 9+6t, 10+6t>
    family 3: <6, 2+6t, 3+6t, 4+6t, 5+6t>

For families 1 and 2 the ideal of the affine monomial curve is generated by
nine explicit binomials (the initial forms below) with six, respectively
seven, syzygies among them.  Everything here works at a concrete tau.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import BadFamily, BadTau
from .poly import PolyRing, WeightedPolynomial
from .semigroup import NumericalSemigroup, from_generators

_OFFSETS = {1: (3, 4, 7, 8), 2: (7, 8, 9, 10), 3: (2, 3, 4, 5)}


def _check(family: int, tau: int, allowed=(1, 2, 3)) -> None:
    if family not in allowed:
        raise BadFamily(f"family must be one of {allowed}, got {family!r}")
    if not isinstance(tau, int) or tau < 1:
        raise BadTau(f"tau must be a positive integer, got {tau!r}")


def family_generators(family: int, tau: int) -> tuple[int, ...]:
    _check(family, tau)
    return (6,) + tuple(j + 6 * tau for j in _OFFSETS[family])


def family_semigroup(family: int, tau: int) -> NumericalSemigroup:
    return from_generators(family_generators(family, tau))


def family_ring(family: int, tau: int) -> PolyRing:
    _check(family, tau, (1, 2))
    offs = _OFFSETS[family]
    return PolyRing(("X",) + tuple(f"Y{j}" for j in offs), family_generators(family, tau))


def family_initial_forms(family: int, tau: int) -> dict[str, WeightedPolynomial]:
    """The nine binomial generators, keyed by their printed names (F6, G8, ...).

    The numeric suffix i is the weight minus 12*tau.
    """
    ring = family_ring(family, tau)
    t = tau
    if family == 1:
        X, Y3, Y4, Y7, Y8 = ring.gens()
        return {
            "F6": Y3**2 - X ** (2 * t + 1),
            "F7": Y3 * Y4 - X**t * Y7,
            "G8": Y4**2 - X**t * Y8,
            "G10": Y3 * Y7 - X ** (t + 1) * Y4,
            "F11": Y4 * Y7 - Y3 * Y8,
            "F12": Y4 * Y8 - X ** (2 * t + 2),
            "F14": Y7**2 - X ** (t + 1) * Y8,
            "F15": Y7 * Y8 - X ** (t + 2) * Y3,
            "G16": Y8**2 - X ** (t + 2) * Y4,
        }
    X, Y7, Y8, Y9, Y10 = ring.gens()
    return {
        "F14": Y7**2 - X ** (t + 1) * Y8,
        "F15": Y7 * Y8 - X ** (t + 1) * Y9,
        "F16": Y7 * Y9 - X ** (t + 1) * Y10,
        "G16": Y8**2 - X ** (t + 1) * Y10,
        "F17": Y8 * Y9 - Y7 * Y10,
        "F18": Y8 * Y10 - X ** (2 * t + 3),
        "G18": Y9**2 - X ** (2 * t + 3),
        "G19": Y9 * Y10 - X ** (t + 2) * Y7,
        "G20": Y10**2 - X ** (t + 2) * Y8,
    }


def form_index(name: str) -> int:
    return int(name[1:])


# A syzygy term: (sign, multiplier as {variable: exponent in tau}, form name)
Term = tuple[int, dict[str, str], str]

_EXPONENTS: dict[str, Callable[[int], int]] = {
    "1": lambda t: 1,
    "t": lambda t: t,
    "t+1": lambda t: t + 1,
    "t+2": lambda t: t + 2,
}


def _term_str(term: Term) -> str:
    sign, mult, name = term
    m = "".join(v if e == "1" else f"{v}^({e})" for v, e in mult.items())
    return ("-" if sign < 0 else "+") + m + name


@dataclass(frozen=True)
class Syzygy:
    terms: tuple[Term, ...]
    # as typeset, when it differs from ``terms``
    printed: tuple[Term, ...] | None = None
    erratum: str = ""

    def expand(self, forms: dict[str, WeightedPolynomial], tau: int, printed: bool = False) -> WeightedPolynomial:
        ring = next(iter(forms.values())).ring
        total = ring.zero()
        for sign, mult, name in (self.printed or self.terms) if printed else self.terms:
            m = ring.const(sign)
            for var, e in mult.items():
                m = m * ring.var(var) ** _EXPONENTS[e](tau)
            total = total + m * forms[name]
        return total

    def label(self) -> str:
        return " ".join(_term_str(t) for t in self.terms).lstrip("+")


FAMILY1_SYZYGIES = (
    Syzygy(
        ((1, {"Y4": "1"}, "F6"), (-1, {"Y3": "1"}, "F7"), (-1, {"X": "t"}, "G10")),
        printed=((1, {"Y4": "1"}, "F6"), (-1, {"Y3": "1"}, "F7"), (1, {"X": "t"}, "G10")),
        erratum="sign of X^t*G10 is printed as +; only - gives zero",
    ),
    Syzygy(
        (
            (1, {"X": "1", "Y4": "1"}, "F7"),
            (-1, {"Y7": "1"}, "G10"),
            (1, {"Y3": "1"}, "F14"),
            (-1, {"X": "1", "Y3": "1"}, "G8"),
        )
    ),
    Syzygy(((1, {"Y4": "1"}, "F11"), (-1, {"Y7": "1"}, "G8"), (1, {"Y8": "1"}, "F7"))),
    Syzygy(((1, {"Y4": "1"}, "F12"), (-1, {"Y8": "1"}, "G8"), (-1, {"X": "t"}, "G16"))),
    Syzygy(((1, {"Y4": "1"}, "F14"), (-1, {"Y8": "1"}, "G10"), (-1, {"Y7": "1"}, "F11"))),
    Syzygy(((1, {"Y4": "1"}, "F15"), (-1, {"Y8": "1"}, "F11"), (-1, {"Y3": "1"}, "G16"))),
)

FAMILY2_SYZYGIES = (
    Syzygy(((1, {"Y10": "1"}, "F14"), (-1, {"Y8": "1"}, "F16"), (1, {"Y7": "1"}, "F17"))),
    Syzygy(((1, {"Y10": "1"}, "F15"), (-1, {"Y9": "1"}, "G16"), (1, {"Y8": "1"}, "F17"))),
    Syzygy(
        ((1, {"Y10": "1"}, "G16"), (-1, {"Y8": "1"}, "F18"), (1, {"X": "t+1"}, "G20")),
        printed=((1, {"Y10": "1"}, "G16"), (-1, {"Y8": "1"}, "F18"), (-1, {"X": "t+1"}, "G20")),
        erratum="X^(t+1)*G20 carries - in the list and + in the expanded display; + is correct",
    ),
    Syzygy(((1, {"Y10": "1"}, "F17"), (-1, {"Y8": "1"}, "G19"), (1, {"Y7": "1"}, "G20"))),
    Syzygy(((1, {"Y10": "1"}, "F18"), (-1, {"X": "t+2"}, "G16"), (-1, {"Y8": "1"}, "G20"))),
    Syzygy(
        ((1, {"Y10": "1"}, "G18"), (-1, {"X": "t+2"}, "F16"), (-1, {"Y9": "1"}, "G19")),
        printed=((1, {"Y10": "1"}, "G18"), (-1, {"X": "t+2"}, "F16"), (-1, {"Y9": "1"}, "F19")),
        erratum="printed F19 is not among the nine forms; G19 is meant",
    ),
    Syzygy(((1, {"Y10": "1"}, "G19"), (-1, {"X": "t+2"}, "F17"), (-1, {"Y9": "1"}, "G20"))),
)


def family_syzygies(family: int) -> tuple[Syzygy, ...]:
    if family == 1:
        return FAMILY1_SYZYGIES
    if family == 2:
        return FAMILY2_SYZYGIES
    raise BadFamily(f"syzygies are listed for families 1 and 2, got {family!r}")


@dataclass
class Verdict:
    ok: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "failures": self.failures}


def verify_parametrization(family: int, tau: int) -> Verdict:
    """Every initial form must vanish on (t^6, t^{j+6 tau}, ...)."""
    bad = []
    for name, f in family_initial_forms(family, tau).items():
        image = f.substitute_curve()
        if image:
            bad.append(f"{name} = {f!r} maps to {image}")
    return Verdict(not bad, bad)


def verify_syzygies(family: int, tau: int) -> Verdict:
    forms = family_initial_forms(family, tau)
    bad = []
    for k, syz in enumerate(family_syzygies(family), start=1):
        rest = syz.expand(forms, tau)
        if not rest.is_zero():
            bad.append(f"syzygy {k} ({syz.label()}) leaves {rest!r}")
    return Verdict(not bad, bad)


@dataclass(frozen=True)
class FamilySpec:
    family: int
    tau: int
    generators: tuple[int, ...]
    genus: int
    last_gap: int
    np_bound: int
    dp_bound: int
    t1_plus: int
    t1_minus: int | None
    cfv_cs: int


def family_expected_invariants(family: int, tau: int) -> FamilySpec:
    """Closed forms in tau.  Family 3's genus 6t+1 follows from symmetry and D-P = 12t+1."""
    _check(family, tau)
    t = tau
    if family == 1:
        genus, np_, dp, tp, tm = 3 + 6 * t, 8 * t + 7, 12 * t + 5, 4 * t - 2, 11 * t + 8
    elif family == 2:
        genus, np_, dp, tp, tm = 6 + 6 * t, 8 * t + 11, 12 * t + 11, 4 * t, 11 * t + 15
    else:
        genus, np_, dp, tp, tm = 6 * t + 1, 8 * t + 5, 12 * t + 1, 4 * t - 4, None
    return FamilySpec(
        family=family,
        tau=tau,
        generators=family_generators(family, tau),
        genus=genus,
        last_gap=2 * genus - 1,
        np_bound=np_,
        dp_bound=dp,
        t1_plus=tp,
        t1_minus=tm,
        cfv_cs=np_,
    )


def bicanonical_basis(family: int, tau: int) -> list[tuple[int, ...]]:
    """Exponent vectors (in the ring variables) of the monomial basis of H^0(4g-4)."""
    _check(family, tau, (1, 2))
    t = tau
    out = []

    def add(xmax, ys):
        for i in range(xmax + 1):
            e = [i, 0, 0, 0, 0]
            for y in ys:
                e[1 + y] += 1
            out.append(tuple(e))

    if family == 1:
        add(4 * t + 1, [])
        for j in range(4):
            add(3 * t, [j])
        add(2 * t - 1, [0, 3])
    else:
        add(4 * t + 3, [])
        for j in (0, 1):
            add(3 * t + 2, [j])
        for j in (2, 3):
            add(3 * t + 1, [j])
        add(2 * t, [0, 3])
    return out


def bicanonical_basis_size(family: int, tau: int) -> int:
    """Size of the bicanonical basis; checked against 3g - 3 and the nongaps <= 4g - 4."""
    basis = bicanonical_basis(family, tau)
    ring = family_ring(family, tau)
    s = family_semigroup(family, tau)
    g = s.genus
    ws = sorted(ring.weight_of(e) for e in basis)
    nongaps = [n for n in range(0, 4 * g - 3) if n in s]
    if len(basis) != 3 * g - 3 or ws != nongaps:
        raise AssertionError(f"basis of family {family} at tau={tau} does not match 3g-3 = {3 * g - 3}")
    return len(basis)
