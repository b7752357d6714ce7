"""Cyclotomic cosets modulo q^k - 1 and minimal polynomials h_a(x) of gamma^(-a)."""

from dataclasses import dataclass

from .errors import CoefficientOutsideSubfield
from .field import ZERO


@dataclass(frozen=True)
class CyclotomicCoset:
    representative: int
    members: tuple

    def __len__(self):
        return len(self.members)

    def __contains__(self, a):
        return a in self.members


def cyclotomic_coset(a, q, modulus):
    """The q-cyclotomic coset {a*q^j mod modulus}, a normalised first."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    a %= modulus
    seen = []
    x = a
    while x not in seen:
        seen.append(x)
        x = x * q % modulus
    members = tuple(sorted(seen))
    return CyclotomicCoset(members[0], members)


def coset_representative(a, q, modulus):
    return cyclotomic_coset(a, q, modulus).representative


def polys_equal(a1, a2, q, modulus):
    """h_{a1} == h_{a2}, decided on cyclotomic cosets (no expansion)."""
    return (a2 % modulus) in cyclotomic_coset(a1, q, modulus)


@dataclass(frozen=True)
class PolyOverFq:
    """Polynomial over F_q with log-coded coefficients, constant term first."""

    coeffs: tuple

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def evaluate(self, ctx, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, x), c)
        return acc

    def coefficient_list(self, ctx):
        """Coefficients as integers: prime-field values when t = 1, else F_q indices."""
        if ctx.params.t == 1:
            return [ctx.to_vector(c) for c in self.coeffs]
        return [int(ctx.fq_index[c + 1]) for c in self.coeffs]

    def render(self, ctx, var="x"):
        terms = []
        for j, c in enumerate(self.coefficient_list(ctx)):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                mono = var if j == 1 else f"{var}^{j}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) or "0"


def minimal_polynomial(ctx, a):
    """h_a(x): the minimal polynomial over F_q of gamma^(-a).

    Expanded as prod_j (x - gamma^(-a q^j)) in F_{q^k}; every coefficient is
    checked to lie in the subfield.
    """
    N = ctx.n_units
    coset = cyclotomic_coset(-a, ctx.q, N)
    poly = [ctx.one]
    for e in coset.members:
        root = ctx.neg(ctx.element(e))
        # poly * (x + root)
        out = [ZERO] * (len(poly) + 1)
        for j, c in enumerate(poly):
            out[j + 1] = ctx.add(out[j + 1], c)
            out[j] = ctx.add(out[j], ctx.mul(c, root))
        poly = out
    for c in poly:
        if not ctx.in_subfield(c):
            raise CoefficientOutsideSubfield(f"coefficient gamma^{c} of h_{a} is not in F_q")
    return PolyOverFq(tuple(poly))
