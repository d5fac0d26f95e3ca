"""Rational functions with declared factored denominators.

A :class:`FactoredFraction` is ``numerator / prod(f_i^e_i)`` where the ``f_i``
range over a fixed, declared :class:`DenomBasis` of non-monomial polynomials
and the exponents are arbitrary integers.  Monomial denominators never appear:
they are units of the Laurent ring and are folded into the numerator's
exponents.  No general gcd is computed; equality is decided by
cross-multiplication, and :meth:`FactoredFraction.reduce` cancels declared
factors out of the numerator by exact division.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .ring import (ContextError, LaurentPoly, Rat, UnitError, VarContext,
                   exact_divide, serialize_poly)


class BasisError(ValueError):
    """A denominator factor fell outside the declared basis."""


class DenomBasis:
    """Ordered list of declared denominator factors for one context.

    Factors must be non-monomial (units are handled by Laurent exponents)
    and pairwise non-associate; irreducibility is the caller's promise.
    """

    __slots__ = ("ctx", "factors", "names")

    def __init__(self, ctx: VarContext, factors: Sequence[LaurentPoly],
                 names: Optional[Sequence[str]] = None):
        self.ctx = ctx
        for f in factors:
            if f.ctx != ctx:
                raise ContextError("factor context mismatch")
            if f.is_monomial():
                raise BasisError(f"monomial factor {f!r} belongs in the numerator")
        self.factors = tuple(factors)
        self.names = tuple(names) if names is not None else tuple(
            serialize_poly(f) for f in factors)

    def __eq__(self, other):
        return self is other or (isinstance(other, DenomBasis)
                                 and self.ctx == other.ctx
                                 and all(a == b for a, b in
                                         zip(self.factors, other.factors))
                                 and len(self.factors) == len(other.factors))

    def __repr__(self):
        return f"DenomBasis({', '.join(self.names)})"

    def nfactors(self) -> int:
        return len(self.factors)

    def zero(self) -> "FactoredFraction":
        return FactoredFraction(self, self.ctx.zero())

    def one(self) -> "FactoredFraction":
        return FactoredFraction(self, self.ctx.one())

    def const(self, c: Rat) -> "FactoredFraction":
        return FactoredFraction(self, self.ctx.const(c))

    def of(self, num: Union[LaurentPoly, Rat],
           denom: Optional[Mapping[int, int]] = None) -> "FactoredFraction":
        if isinstance(num, (int, Fraction)):
            num = self.ctx.const(num)
        exps = [0] * self.nfactors()
        for i, e in (denom or {}).items():
            exps[i] = e
        return FactoredFraction(self, num, tuple(exps))

    def over(self, num: Union[LaurentPoly, Rat], *factors: LaurentPoly
             ) -> "FactoredFraction":
        """Build ``num / (f1 * f2 * ...)`` with each listed factor declared."""
        exps = [0] * self.nfactors()
        for f in factors:
            for i, g in enumerate(self.factors):
                if f == g:
                    exps[i] += 1
                    break
            else:
                raise BasisError(f"factor {f!r} not in basis")
        if isinstance(num, (int, Fraction)):
            num = self.ctx.const(num)
        return FactoredFraction(self, num, tuple(exps))

    def factor_over(self, p: LaurentPoly) -> tuple[LaurentPoly, tuple[int, ...]]:
        """Factor ``p`` as ``unit * prod(f_i^k_i)``.

        Returns ``(unit, exponents)``; raises :class:`BasisError` with the
        residual attached when a non-unit factor remains.
        """
        if p.is_zero():
            raise BasisError("cannot factor the zero polynomial")
        exps = [0] * self.nfactors()
        for i, f in enumerate(self.factors):
            while True:
                q = exact_divide(p, f)
                if q is None:
                    break
                p = q
                exps[i] += 1
        if not p.is_monomial():
            err = BasisError(f"residual factor outside basis: {serialize_poly(p)}")
            err.residual = p  # type: ignore[attr-defined]
            raise err
        return p, tuple(exps)


class FactoredFraction:
    """``num / prod(f_i^e_i)`` over a :class:`DenomBasis`."""

    __slots__ = ("basis", "num", "exps")

    def __init__(self, basis: DenomBasis, num: LaurentPoly,
                 exps: Optional[tuple[int, ...]] = None):
        self.basis = basis
        self.num = num
        if exps is None:
            exps = (0,) * basis.nfactors()
        if num.is_zero():
            exps = (0,) * basis.nfactors()
        self.exps = exps

    @property
    def ctx(self) -> VarContext:
        return self.basis.ctx

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __repr__(self):
        return f"<{serialize_frac(self)}>"

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "FactoredFraction":
        if isinstance(other, FactoredFraction):
            if other.basis != self.basis:
                raise ContextError("denominator basis mismatch")
            return other
        if isinstance(other, LaurentPoly):
            return FactoredFraction(self.basis, other)
        if isinstance(other, (int, Fraction)):
            return self.basis.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        m = tuple(max(a, b) for a, b in zip(self.exps, other.exps))
        num = (self.num * self.basis_power(tuple(x - a for x, a in zip(m, self.exps)))
               + other.num * self.basis_power(tuple(x - a for x, a in zip(m, other.exps))))
        return FactoredFraction(self.basis, num, m)

    __radd__ = __add__

    def __neg__(self):
        return FactoredFraction(self.basis, -self.num, self.exps)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FactoredFraction(self.basis, self.num * other.num,
                                tuple(a + b for a, b in zip(self.exps, other.exps)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        out = self.basis.one()
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "FactoredFraction":
        """Invert; the numerator must factor over the basis times a unit."""
        unit, ks = self.basis.factor_over(self.num)
        return FactoredFraction(self.basis, unit.inverse(),
                                tuple(k - e for e, k in zip(self.exps, ks)))

    def basis_power(self, exps: tuple[int, ...]) -> LaurentPoly:
        p = self.ctx.one()
        for f, e in zip(self.basis.factors, exps):
            if e:
                if e < 0:
                    raise BasisError("negative basis power in numerator position")
                p = p * f ** e
        return p

    def reduce(self) -> "FactoredFraction":
        """Cancel declared factors out of the numerator where possible."""
        if self.is_zero():
            return self
        num, exps = self.num, list(self.exps)
        for i, f in enumerate(self.basis.factors):
            while exps[i] > 0:
                q = exact_divide(num, f)
                if q is None:
                    break
                num = q
                exps[i] -= 1
        return FactoredFraction(self.basis, num, tuple(exps))

    # -- predicates ------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return frac_eq(self, other)

    def __hash__(self):
        r = self.reduce()
        return hash((r.num, r.exps))

    # -- calculus ----------------------------------------------------------

    def derivative(self, name: str) -> "FactoredFraction":
        """Quotient rule on the factored form; denominator exponents grow by one."""
        if self.is_zero():
            return self
        dnum = self.num.derivative(name)
        # d(n/prod f^e) = [dn*prod f - n*sum_i e_i df_i prod_{j!=i} f_j] / prod f^{e+1}
        allf = self.ctx.one()
        for f in self.basis.factors:
            allf = allf * f
        total = dnum * allf
        for i, f in enumerate(self.basis.factors):
            e = self.exps[i]
            if e == 0:
                continue
            rest = self.ctx.one()
            for j, g in enumerate(self.basis.factors):
                if j != i:
                    rest = rest * g
            total = total - self.num * self.ctx.const(e) * f.derivative(name) * rest
        out = FactoredFraction(self.basis, total,
                               tuple(e + 1 for e in self.exps))
        return out.reduce()

    # -- substitution -------------------------------------------------------

    def substitute(self, images: Mapping[str, "FactoredFraction"],
                   target: Optional[DenomBasis] = None) -> "FactoredFraction":
        """Evaluate at fraction images of the variables.

        Every substituted denominator factor must clear over the target
        basis (raises :class:`BasisError` otherwise, signalling the caller
        to extend the basis).
        """
        tgt = target if target is not None else self.basis
        num = eval_poly(self.num, images, tgt)
        out = num
        for f, e in zip(self.basis.factors, self.exps):
            if e:
                fsub = eval_poly(f, images, tgt)
                out = out * fsub ** (-e)
        return out.reduce()

    def restrict(self, assignments: Mapping[str, Union[LaurentPoly, Rat]],
                 target: DenomBasis) -> "FactoredFraction":
        """Substitute polynomial values (e.g. a divisor parametrization)."""
        images: dict[str, FactoredFraction] = {}
        for name, val in assignments.items():
            if isinstance(val, (int, Fraction)):
                images[name] = target.const(val)
            elif isinstance(val, LaurentPoly):
                images[name] = FactoredFraction(target, val)
            else:
                images[name] = val
        return self.substitute(images, target)


def eval_poly(p: LaurentPoly, images: Mapping[str, FactoredFraction],
              target: DenomBasis) -> FactoredFraction:
    """Evaluate a Laurent polynomial at fraction images of its variables."""
    img: list[Optional[FactoredFraction]] = []
    for name in p.ctx.names:
        if name in images:
            v = images[name]
            if isinstance(v, (int, Fraction)):
                v = target.const(v)
            img.append(v)
        elif name in target.ctx.index:
            img.append(FactoredFraction(target, target.ctx.var(name)))
        else:
            img.append(None)
    out = target.zero()
    pow_cache: dict[tuple[int, int], FactoredFraction] = {}
    for exps, coeff in p.terms.items():
        term = target.const(coeff)
        for i, e in enumerate(exps):
            if e == 0:
                continue
            if img[i] is None:
                raise ContextError(f"variable {p.ctx.names[i]!r} has no image")
            pc = pow_cache.get((i, e))
            if pc is None:
                pc = img[i] ** e
                pow_cache[(i, e)] = pc
            term = term * pc
        out = out + term
    return out.reduce()


def frac_eq(x: FactoredFraction, y: FactoredFraction) -> bool:
    """Equality by cross-multiplication to a common denominator."""
    if x.basis != y.basis:
        raise ContextError("denominator basis mismatch")
    m = tuple(max(a, b) for a, b in zip(x.exps, y.exps))
    lhs = x.num * x.basis_power(tuple(c - a for c, a in zip(m, x.exps)))
    rhs = y.num * y.basis_power(tuple(c - a for c, a in zip(m, y.exps)))
    return lhs == rhs


def serialize_frac(fr: FactoredFraction) -> str:
    """Emit ``num`` or ``(num) / (expanded denominator)``."""
    r = fr.reduce()
    num_poly = r.num
    denom = r.ctx.one()
    for f, e in zip(r.basis.factors, r.exps):
        if e > 0:
            denom = denom * f ** e
        elif e < 0:
            num_poly = num_poly * f ** (-e)
    num = serialize_poly(num_poly)
    if denom.is_one():
        return num
    return f"({num}) / ({serialize_poly(denom)})"
