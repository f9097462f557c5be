"""Sparse exact multivariate polynomials over a pluggable coefficient field.

A ring fixes an ordered tuple of variable names; monomials are dense exponent
tuples keyed to that order.  Everything is immutable-by-convention and kept in
canonical form (no zero coefficients stored), so `==` on term maps is
polynomial equality.
"""

from __future__ import annotations


class NotInSpan(Exception):
    """Raised when a polynomial does not lie in the span of a given basis."""


class PolyRing:
    def __init__(self, field, varnames):
        self.field = field
        self.varnames = tuple(varnames)
        self.index = {v: i for i, v in enumerate(self.varnames)}
        if len(self.index) != len(self.varnames):
            raise ValueError("duplicate variable names")
        self.nvars = len(self.varnames)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(self.field.one())

    def const(self, c):
        c = self.field.coerce(c)
        if not c:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name):
        exps = [0] * self.nvars
        exps[self.index[name]] = 1
        return Polynomial(self, {tuple(exps): self.field.one()})

    def monomial(self, exps, coeff=1):
        """exps: dict name -> exponent, or a dense tuple."""
        coeff = self.field.coerce(coeff)
        if not coeff:
            return self.zero()
        if isinstance(exps, dict):
            dense = [0] * self.nvars
            for name, e in exps.items():
                dense[self.index[name]] = e
            exps = tuple(dense)
        else:
            exps = tuple(exps)
        return Polynomial(self, {exps: coeff})

    def from_terms(self, terms):
        out = {}
        for exps, c in terms.items():
            c = self.field.coerce(c)
            if c:
                out[tuple(exps)] = c
        return Polynomial(self, out)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and other.field == self.field
                and other.varnames == self.varnames)

    def __hash__(self):
        return hash((self.field, self.varnames))

    def __repr__(self):
        return f"PolyRing({self.field}, {list(self.varnames)})"


def _grlex_key(exps):
    return (sum(exps), exps)


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- ring arithmetic ---------------------------------------------------

    def _coerce_operand(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        try:
            return self.ring.const(other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce_operand(other)
        if other is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                s = c if s is None else s + c
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        acc = self.ring.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        coerced = self._coerce_operand(other)
        if coerced is None:
            return NotImplemented
        return self.terms == coerced.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # -- structure ---------------------------------------------------------

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def sorted_terms(self):
        """Terms in graded-lex order (canonical, byte-stable)."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    def coeff(self, exps):
        """Coefficient of a monomial; exps as dict name -> exponent or tuple."""
        if isinstance(exps, dict):
            dense = [0] * self.ring.nvars
            for name, e in exps.items():
                dense[self.ring.index[name]] = e
            exps = tuple(dense)
        return self.terms.get(tuple(exps), self.ring.field.zero())

    def variables(self):
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(self.ring.varnames[i])
        return used

    # -- calculus / substitution -------------------------------------------

    def partial_derivative(self, name):
        i = self.ring.index[name]
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                k = e2[i]
                e2[i] -= 1
                e2 = tuple(e2)
                c2 = c * k
                s = out.get(e2)
                s = c2 if s is None else s + c2
                if s:
                    out[e2] = s
                elif e2 in out:
                    del out[e2]
        return Polynomial(self.ring, out)

    def substitute(self, assignment, target_ring=None):
        """Replace variables by polynomials (or scalars).

        `assignment` maps variable names to values; unassigned variables map
        to the variable of the same name in the target ring (defaults to this
        ring).
        """
        ring = target_ring if target_ring is not None else self.ring
        images = []
        for name in self.ring.varnames:
            if name in assignment:
                val = assignment[name]
                if not isinstance(val, Polynomial):
                    val = ring.const(val)
                elif val.ring != ring:
                    raise ValueError(f"image of {name} lives in the wrong ring")
            else:
                val = ring.var(name)
            images.append(val)
        result = ring.zero()
        power_cache = [{} for _ in images]
        for e, c in self.terms.items():
            term = ring.const(c)
            for i, k in enumerate(e):
                if k:
                    cache = power_cache[i]
                    if k not in cache:
                        cache[k] = images[i] ** k
                    term = term * cache[k]
            result = result + term
        return result

    def evaluate(self, assignment):
        """Full evaluation to a field element; every used variable must be set."""
        field = self.ring.field
        acc = field.zero()
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    name = self.ring.varnames[i]
                    v = v * (field.coerce(assignment[name]) ** k)
            acc = acc + v
        return acc

    # -- serialization -----------------------------------------------------

    def to_json(self):
        field = self.ring.field
        return [{"coeff": field.coeff_to_json(c), "exps": list(e)}
                for e, c in self.sorted_terms()]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{self.ring.varnames[i]}^{k}" if k > 1 else self.ring.varnames[i]
                for i, k in enumerate(e) if k)
            parts.append(f"({c!r})*{mono}" if mono else f"({c!r})")
        return " + ".join(parts)


def coefficient_in_basis(p, basis):
    """Exact coordinates of p in the linear span of `basis`.

    Raises NotInSpan when p is outside the span.  Solves on the joint
    monomial-coefficient matrix.
    """
    from .linalg import ExactMatrix

    if not basis:
        raise ValueError("empty basis")
    ring = basis[0].ring
    if p.ring != ring:
        raise ValueError("polynomial and basis from different rings")
    monomials = set(p.terms)
    for b in basis:
        monomials |= set(b.terms)
    monomials = sorted(monomials, key=_grlex_key)
    field = ring.field
    zero = field.zero()
    mat = ExactMatrix(field, [[b.terms.get(m, zero) for b in basis]
                              for m in monomials])
    target = [p.terms.get(m, zero) for m in monomials]
    x = mat.solve(target)
    if x is None:
        raise NotInSpan("polynomial is not in the span of the basis")
    # mat.solve returns some solution of a possibly underdetermined system;
    # for a genuinely independent basis it is the unique one.  Guard anyway.
    residual = mat.mul_vector(x)
    if residual != target:
        raise NotInSpan("no exact solution")
    return x
