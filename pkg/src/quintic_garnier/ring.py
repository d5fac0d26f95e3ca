"""Exact multivariate Laurent polynomials over the rationals.

A :class:`LaurentPoly` is a finite sum of terms ``c * x1^e1 * ... * xn^en``
with nonzero rational ``c`` and integer (possibly negative) exponents.  The
variable universe is fixed by a :class:`VarContext`; two values interoperate
only when they share a context.  Terms are stored sparsely as a dict mapping
exponent vectors to coefficients, and every value is normalized on
construction (no zero coefficients, exponents of an algebraic-extension
variable reduced into ``[0, deg-1]``).

The context may declare one algebraic extension: a designated variable ``r``
together with a monic minimal polynomial over Q.  Arithmetic then happens in
``Q[r]/(m(r))`` tensored with the Laurent ring on the remaining variables;
``r`` is a unit because ``m`` has nonzero constant term.

The text grammar used for serialization is::

    term := [sign] rational ('*' var '^' int)*

terms joined by ``+``/``-``; canonical emission orders terms by descending
lexicographic exponent order and omits zero exponents.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

Rat = Union[int, Fraction]
Exponents = tuple[int, ...]


class ContextError(ValueError):
    """Operands do not share a variable context, or a variable is unknown."""


class UnitError(ValueError):
    """An operation required an invertible (monomial) value."""


class VarContext:
    """Ordered list of distinct variable names, optionally with one algebraic
    extension ``(variable, monic minimal polynomial coefficients c0..c_{d-1})``
    meaning ``r^d + c_{d-1} r^{d-1} + ... + c0 = 0``.
    """

    __slots__ = ("names", "index", "ext_var", "ext_deg", "_ext_high", "_ext_inv")

    def __init__(self, names: Iterable[str],
                 extension: Optional[tuple[str, Iterable[Rat]]] = None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ContextError("variable names must be distinct")
        self.index = {n: i for i, n in enumerate(self.names)}
        self.ext_var: Optional[int] = None
        self.ext_deg = 0
        self._ext_high: dict[int, Fraction] = {}
        self._ext_inv: dict[int, Fraction] = {}
        if extension is not None:
            var, coeffs = extension
            if var not in self.index:
                raise ContextError(f"extension variable {var!r} not declared")
            cs = [Fraction(c) for c in coeffs]
            if not cs or cs[0] == 0:
                raise ContextError("minimal polynomial needs nonzero constant term")
            self.ext_var = self.index[var]
            self.ext_deg = len(cs)
            # r^d = -(c0 + c1 r + ... + c_{d-1} r^{d-1})
            self._ext_high = {k: -c for k, c in enumerate(cs) if c != 0}
            # r^-1 = -(c1 + c2 r + ... + r^{d-1}) / c0
            inv = {k - 1: -Fraction(1) / cs[0] * c for k, c in enumerate(cs) if k >= 1 and c != 0}
            inv[self.ext_deg - 1] = -Fraction(1) / cs[0]
            self._ext_inv = inv

    def __eq__(self, other):
        return self is other or (isinstance(other, VarContext)
                                 and self.names == other.names
                                 and self.ext_var == other.ext_var
                                 and self._ext_high == other._ext_high)

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarContext({', '.join(self.names)})"

    def nvars(self) -> int:
        return len(self.names)

    # -- element constructors ------------------------------------------

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return self.const(1)

    def const(self, c: Rat) -> "LaurentPoly":
        c = Fraction(c)
        if c == 0:
            return LaurentPoly(self, {})
        return LaurentPoly(self, {(0,) * self.nvars(): c})

    def var(self, name: str, power: int = 1) -> "LaurentPoly":
        return self.monomial(1, {name: power})

    def monomial(self, coeff: Rat, powers: Mapping[str, int]) -> "LaurentPoly":
        coeff = Fraction(coeff)
        if coeff == 0:
            return self.zero()
        exps = [0] * self.nvars()
        for name, e in powers.items():
            if name not in self.index:
                raise ContextError(f"unknown variable {name!r}")
            exps[self.index[name]] = int(e)
        return LaurentPoly(self, {tuple(exps): coeff})

    def parse(self, text: str) -> "LaurentPoly":
        return parse_poly(self, text)


class LaurentPoly:
    """Sparse Laurent polynomial; immutable by convention."""

    __slots__ = ("ctx", "terms", "_key")

    def __init__(self, ctx: VarContext, terms: dict[Exponents, Fraction],
                 _normalized: bool = False):
        self.ctx = ctx
        if not _normalized:
            terms = _normalize(ctx, terms)
        self.terms = terms
        self._key: Optional[tuple] = None

    # -- basics ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        n = self.ctx.nvars()
        return self.terms == {(0,) * n: Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1
                                  and not any(next(iter(self.terms))))

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise UnitError("not a constant")
        return next(iter(self.terms.values()))

    def key(self) -> tuple:
        """Canonical hashable form (terms sorted by descending exponents)."""
        if self._key is None:
            self._key = tuple(sorted(self.terms.items(), reverse=True))
        return self._key

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx.names, self.key()))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"<{serialize_poly(self)}>"

    # -- ring operations --------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.ctx != self.ctx:
                raise ContextError("context mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return LaurentPoly(self.ctx, terms, _normalized=True)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ctx, {e: -c for e, c in self.terms.items()},
                           _normalized=True)

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
        if self.is_zero() or other.is_zero():
            return self.ctx.zero()
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Exponents, Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                s = out.get(e)
                if s is None:
                    out[e] = c
                else:
                    s = s + c
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        if self.ctx.ext_var is not None:
            return LaurentPoly(self.ctx, out)
        return LaurentPoly(self.ctx, out, _normalized=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ctx.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def inverse(self) -> "LaurentPoly":
        """Inverse of a unit (signed monomial, also in the extension variable)."""
        if not self.is_monomial():
            raise UnitError("only monomials are invertible in the Laurent ring")
        (exps, coeff), = self.terms.items()
        ev = self.ctx.ext_var
        if ev is not None and exps[ev]:
            # fold the extension variable back via its inverse polynomial
            e = list(exps)
            k = e[ev]
            e[ev] = 0
            rest = LaurentPoly(self.ctx, {tuple(e): coeff}).inverse()
            rinv = LaurentPoly(
                self.ctx,
                {tuple(0 if i != ev else d for i in range(self.ctx.nvars())): c
                 for d, c in self.ctx._ext_inv.items()})
            return rest * rinv ** k
        inv = tuple(-e for e in exps)
        return LaurentPoly(self.ctx, {inv: 1 / coeff}, _normalized=True)

    # -- calculus and substitution ---------------------------------------

    def derivative(self, name: str) -> "LaurentPoly":
        i = self.ctx.index[name]
        out: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = c * e[i]
        return LaurentPoly(self.ctx, out, _normalized=True)

    def substitute(self, images: Mapping[str, "LaurentPoly"],
                   target: Optional[VarContext] = None) -> "LaurentPoly":
        """Ring-homomorphism image; unmapped variables must exist in the target.

        Variables occurring with negative exponents must map to units
        (signed monomials).  Raises :class:`UnitError` otherwise.
        """
        tgt = target if target is not None else self.ctx
        if tgt is self.ctx and not images:
            return self
        img: list[Optional[LaurentPoly]] = []
        for name in self.ctx.names:
            if name in images:
                p = images[name]
                if isinstance(p, (int, Fraction)):
                    p = tgt.const(p)
                if p.ctx != tgt:
                    raise ContextError("image context mismatch")
                img.append(p)
            else:
                if name not in tgt.index:
                    raise ContextError(f"variable {name!r} missing from target context")
                img.append(tgt.var(name))
        out = tgt.zero()
        pow_cache: dict[tuple[int, int], LaurentPoly] = {}
        for exps, coeff in self.terms.items():
            term = tgt.const(coeff)
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                pc = pow_cache.get((i, e))
                if pc is None:
                    base = img[i]
                    if e < 0 and not base.is_monomial():
                        raise UnitError(
                            f"negative power of {self.ctx.names[i]!r} needs a unit image")
                    pc = base ** e
                    pow_cache[(i, e)] = pc
                term = term * pc
            out = out + term
        return out

    # -- structure helpers -------------------------------------------------

    def min_exponent(self, name: str) -> int:
        i = self.ctx.index[name]
        if self.is_zero():
            return 0
        return min(e[i] for e in self.terms)

    def max_exponent(self, name: str) -> int:
        i = self.ctx.index[name]
        if self.is_zero():
            return 0
        return max(e[i] for e in self.terms)

    def coefficients_in(self, name: str) -> dict[int, "LaurentPoly"]:
        """Split into coefficients of powers of one variable."""
        i = self.ctx.index[name]
        buckets: dict[int, dict[Exponents, Fraction]] = {}
        for e, c in self.terms.items():
            ne = list(e)
            d = ne[i]
            ne[i] = 0
            buckets.setdefault(d, {})[tuple(ne)] = c
        return {d: LaurentPoly(self.ctx, t, _normalized=True)
                for d, t in sorted(buckets.items())}


def _normalize(ctx: VarContext, terms: dict[Exponents, Fraction]) -> dict[Exponents, Fraction]:
    out: dict[Exponents, Fraction] = {}
    ev = ctx.ext_var
    pending = [(e, Fraction(c)) for e, c in terms.items() if c]
    d = ctx.ext_deg
    while pending:
        e, c = pending.pop()
        if ev is not None and not (0 <= e[ev] < d):
            k = e[ev]
            if k >= d:
                table, shift = ctx._ext_high, k - d
            else:
                table, shift = ctx._ext_inv, k + 1
            for re, rc in table.items():
                ne = list(e)
                ne[ev] = re + shift
                pending.append((tuple(ne), c * rc))
            continue
        s = out.get(e)
        if s is None:
            if c:
                out[e] = c
        else:
            s = s + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


# -- exact division -------------------------------------------------------

def exact_divide(p: LaurentPoly, f: LaurentPoly) -> Optional[LaurentPoly]:
    """Return ``p / f`` when exact, else ``None``.

    Works in the Laurent ring: both operands are shifted to ordinary
    polynomials first, so division by a monomial always succeeds.
    """
    if f.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return p
    if p.ctx != f.ctx:
        raise ContextError("context mismatch")
    n = p.ctx.nvars()
    pmin = [min(e[i] for e in p.terms) for i in range(n)]
    fmin = [min(e[i] for e in f.terms) for i in range(n)]
    P = {tuple(x - m for x, m in zip(e, pmin)): c for e, c in p.terms.items()}
    F = {tuple(x - m for x, m in zip(e, fmin)): c for e, c in f.terms.items()}
    lf = max(F)
    cf = F[lf]
    quot: dict[Exponents, Fraction] = {}
    while P:
        lp = max(P)
        diff = tuple(a - b for a, b in zip(lp, lf))
        if any(d < 0 for d in diff):
            return None
        c = P[lp] / cf
        quot[diff] = quot.get(diff, Fraction(0)) + c
        for e, fc in F.items():
            t = tuple(a + b for a, b in zip(diff, e))
            s = P.get(t, Fraction(0)) - c * fc
            if s:
                P[t] = s
            else:
                P.pop(t, None)
    shift = tuple(a - b for a, b in zip(pmin, fmin))
    return LaurentPoly(p.ctx, {tuple(a + b for a, b in zip(e, shift)): c
                               for e, c in quot.items() if c})


# -- named operation wrappers ---------------------------------------------

def lp_arith(op: str, lhs: LaurentPoly, rhs) -> LaurentPoly:
    """Dispatch basic arithmetic by name (used by serialization layers)."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "neg":
        return -lhs
    if op == "pow":
        n = int(rhs)
        if n < 0 and not lhs.is_monomial():
            raise UnitError("negative power of a non-monomial")
        return lhs ** n
    raise ValueError(f"unknown operation {op!r}")


def lp_substitute(p: LaurentPoly, sigma: Mapping[str, LaurentPoly],
                  target: Optional[VarContext] = None) -> LaurentPoly:
    """Substitution by signed Laurent monomials (a ring homomorphism).

    Every image must be a unit so that negative exponents stay meaningful.
    """
    for name, q in sigma.items():
        if isinstance(q, LaurentPoly) and not q.is_monomial():
            raise UnitError(f"image of {name!r} is not a signed monomial")
    return p.substitute(sigma, target)


# -- text grammar -----------------------------------------------------------

def serialize_poly(p: LaurentPoly) -> str:
    """Canonical emission: terms by descending lex exponent order."""
    if p.is_zero():
        return "0"
    parts = []
    for exps, coeff in sorted(p.terms.items(), reverse=True):
        factors = [str(coeff)]
        for name, e in zip(p.ctx.names, exps):
            if e:
                factors.append(f"{name}^{e}")
        parts.append("*".join(factors))
    return " + ".join(parts)


def parse_poly(ctx: VarContext, text: str) -> LaurentPoly:
    """Parse the polynomial grammar; variables must be declared in ``ctx``."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    if text == "0":
        return ctx.zero()
    # split into signed terms at top level
    terms: list[tuple[int, str]] = []
    sign, buf = 1, []
    for i, ch in enumerate(text):
        if ch in "+-":
            if not "".join(buf).strip():
                sign *= 1 if ch == "+" else -1
            elif text[i - 1] in "*^+-eE":
                buf.append(ch)
            else:
                terms.append((sign, "".join(buf).strip()))
                sign, buf = (1 if ch == "+" else -1), []
        else:
            buf.append(ch)
    terms.append((sign, "".join(buf).strip()))
    total = ctx.zero()
    for sgn, term in terms:
        if not term:
            raise ValueError("malformed polynomial text")
        factors = [f.strip() for f in term.split("*")]
        coeff = Fraction(sgn)
        powers: dict[str, int] = {}
        for j, fac in enumerate(factors):
            if "^" in fac:
                var, _, exp = fac.partition("^")
                var = var.strip()
                if var not in ctx.index:
                    raise ContextError(f"undeclared variable {var!r}")
                powers[var] = powers.get(var, 0) + int(exp)
            elif fac in ctx.index:
                powers[fac] = powers.get(fac, 0) + 1
            else:
                coeff *= Fraction(fac)
        total = total + ctx.monomial(coeff, powers)
    return total
