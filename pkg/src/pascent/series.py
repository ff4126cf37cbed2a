"""Exact truncated power series in t over the integer polynomial ring Z[u,v,z,x].

Coefficients are sparse multivariate polynomials with arbitrary-precision
integer coefficients, so every ring operation is exact.  A series is dense
in t (one coefficient polynomial per power t^0 .. t^order) and sparse in the
remaining variables.  Division only ever happens where it stays inside the
ring: inversion of a series whose constant term is +1 or -1, and checked
exact polynomial division by (v - 1).

Internally an exponent vector (e_u, e_v, e_z, e_x) is packed into a single
int (8 bits per variable) so that monomial products reduce to integer
addition; the public accessors speak plain tuples.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

VARS = ("u", "v", "z", "x")

_SHIFT = {"u": 24, "v": 16, "z": 8, "x": 0}
_MASK = 0xFF
_MAX_EXP = 100  # per-variable bound; keeps packed fields from ever carrying


def _pack(exps: Iterable[int]) -> int:
    eu, ev, ez, ex = exps
    return (eu << 24) | (ev << 16) | (ez << 8) | ex


def _unpack(key: int) -> tuple[int, int, int, int]:
    return (key >> 24) & _MASK, (key >> 16) & _MASK, (key >> 8) & _MASK, key & _MASK


class MultiPoly:
    """Integer polynomial in u, v, z, x held as a sparse exponent map.

    The map never stores a zero coefficient, so equal polynomials have equal
    maps and the representation is canonical.  Instances are immutable by
    convention; all operators return new objects.
    """

    __slots__ = ("_t",)

    def __init__(self, packed_terms: dict[int, int] | None = None):
        # Trusted constructor: keys are packed exponents, values nonzero ints.
        self._t = packed_terms if packed_terms is not None else {}

    @classmethod
    def const(cls, value: int) -> "MultiPoly":
        value = int(value)
        return cls({0: value} if value else {})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> "MultiPoly":
        exps = tuple(exps)
        if len(exps) != 4:
            raise ValueError("exponent vector must have 4 entries (u, v, z, x)")
        if any(e < 0 or e > _MAX_EXP for e in exps):
            raise ValueError(f"exponents must lie in [0, {_MAX_EXP}]: {exps}")
        coeff = int(coeff)
        return cls({_pack(exps): coeff} if coeff else {})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        if name not in _SHIFT:
            raise ValueError(f"unknown variable {name!r}; use one of {VARS}")
        return cls({1 << _SHIFT[name]: 1})

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int, int, int], int]) -> "MultiPoly":
        out: dict[int, int] = {}
        for exps, c in terms.items():
            if c:
                out[_pack(exps)] = out.get(_pack(exps), 0) + int(c)
        return cls({k: v for k, v in out.items() if v})

    # -- queries ----------------------------------------------------------

    def terms(self) -> dict[tuple[int, int, int, int], int]:
        """Exponent-vector view of the sparse map."""
        return {_unpack(k): c for k, c in self._t.items()}

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_const(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def const_value(self) -> int:
        if not self._t:
            return 0
        if self.is_const():
            return self._t[0]
        raise ValueError(f"not a constant polynomial: {self}")

    def max_degree(self, var: str) -> int:
        shift = _SHIFT[var]
        return max(((k >> shift) & _MASK for k in self._t), default=0)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self._t == other._t
        if isinstance(other, int):
            return self._t == ({0: other} if other else {})
        return NotImplemented

    __hash__ = None

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other)
        elif not isinstance(other, MultiPoly):
            return NotImplemented
        out = dict(self._t)
        for k, c in other._t.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other)
        elif not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiPoly()
            return MultiPoly({k: c * other for k, c in self._t.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for k1, c1 in self._t.items():
            for k2, c2 in other._t.items():
                k = k1 + k2
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- substitutions ----------------------------------------------------

    def specialize(self, assignments: Mapping[str, int]) -> "MultiPoly":
        """Substitute integers for some of the variables."""
        for name in assignments:
            if name not in _SHIFT:
                raise ValueError(f"unknown variable {name!r}")
        poly = self
        for name, value in assignments.items():
            shift = _SHIFT[name]
            clear = ~(_MASK << shift)
            value = int(value)
            out: dict[int, int] = {}
            for k, c in poly._t.items():
                e = (k >> shift) & _MASK
                c2 = c * value**e
                k2 = k & clear
                s = out.get(k2, 0) + c2
                if s:
                    out[k2] = s
                elif k2 in out:
                    del out[k2]
            poly = MultiPoly(out)
        return poly

    def subst_u_to_uv(self) -> "MultiPoly":
        """Replace u by uv: each monomial u^a v^b becomes u^a v^(a+b)."""
        out: dict[int, int] = {}
        for k, c in self._t.items():
            eu = (k >> 24) & _MASK
            if ((k >> 16) & _MASK) + eu > _MAX_EXP:
                raise ValueError("v-exponent overflow in u -> uv substitution")
            out[k + (eu << 16)] = c
        return MultiPoly(out)

    def coefficient_of(self, var: str, exp: int) -> "MultiPoly":
        """Polynomial coefficient of var^exp, with that variable removed."""
        shift = _SHIFT[var]
        clear = ~(_MASK << shift)
        return MultiPoly(
            {k & clear: c for k, c in self._t.items() if ((k >> shift) & _MASK) == exp}
        )

    def exact_div_v_minus_1(self) -> "MultiPoly":
        """Divide by (v - 1), raising ArithmeticError on a nonzero remainder."""
        groups: dict[int, dict[int, int]] = {}
        for k, c in self._t.items():
            ev = (k >> 16) & _MASK
            base = k & ~(_MASK << 16)
            groups.setdefault(base, {})[ev] = c
        out: dict[int, int] = {}
        for base, col in groups.items():
            top = max(col)
            carry = 0
            for j in range(top, 0, -1):
                carry += col.get(j, 0)
                if carry:
                    out[base | ((j - 1) << 16)] = carry
            if col.get(0, 0) + carry != 0:
                raise ArithmeticError("nonzero remainder in exact division by (v - 1)")
        return MultiPoly(out)

    # -- display ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for exps in sorted(_unpack(k) for k in self._t):
            c = self._t[_pack(exps)]
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(VARS, exps)
                if e
            )
            if not mono:
                text = str(abs(c))
            elif abs(c) == 1:
                text = mono
            else:
                text = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + text)
        head = parts[0][2:] if parts[0].startswith("+ ") else "-" + parts[0][2:]
        return " ".join([head] + parts[1:])

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


_P_ZERO = MultiPoly()
_P_ONE = MultiPoly.const(1)


class TSeries:
    """Power series in t, truncated at a fixed order, over MultiPoly coefficients.

    The truncation order is fixed at construction; binary operations on
    series of different orders truncate the result to the smaller order, so
    precision is never silently overstated.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: list[MultiPoly]):
        if not coeffs:
            raise ValueError("a series needs at least the t^0 coefficient")
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "TSeries":
        return cls([_P_ZERO] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TSeries":
        return cls([_P_ONE] + [_P_ZERO] * order)

    @classmethod
    def const(cls, order: int, value: int) -> "TSeries":
        return cls([MultiPoly.const(value)] + [_P_ZERO] * order)

    @classmethod
    def from_poly(cls, order: int, poly: MultiPoly, t_power: int = 0) -> "TSeries":
        coeffs = [_P_ZERO] * (order + 1)
        if 0 <= t_power <= order:
            coeffs[t_power] = poly
        return cls(coeffs)

    # -- access -------------------------------------------------------

    def coefficient(self, n: int) -> MultiPoly:
        if not 0 <= n <= self.order:
            raise ValueError(f"t^{n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def monomial_coefficient(self, exp: tuple[int, int, int, int, int]) -> int:
        n, *rest = exp
        return self.coefficient(n)._t.get(_pack(rest), 0)

    def terms(self) -> dict[tuple[int, int, int, int, int], int]:
        out = {}
        for n, poly in enumerate(self.coeffs):
            for k, c in poly._t.items():
                out[(n, *_unpack(k))] = c
        return out

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def truncate(self, order: int) -> "TSeries":
        if order >= self.order:
            return self
        if order < 0:
            raise ValueError("order must be nonnegative")
        return TSeries(self.coeffs[: order + 1])

    # -- ring operations ------------------------------------------------

    @staticmethod
    def _coerce(value, order: int) -> "TSeries | None":
        if isinstance(value, TSeries):
            return value
        if isinstance(value, MultiPoly):
            return TSeries.from_poly(order, value)
        if isinstance(value, int):
            return TSeries.const(order, value)
        return None

    def __add__(self, other):
        other = self._coerce(other, self.order)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return TSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])])

    __radd__ = __add__

    def __neg__(self):
        return TSeries([-p for p in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other, self.order)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, MultiPoly)):
            return TSeries([p * other for p in self.coeffs])
        if not isinstance(other, TSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out: list[dict[int, int]] = [dict() for _ in range(n + 1)]
        for i in range(n + 1):
            ai = self.coeffs[i]._t
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = other.coeffs[j]._t
                if not bj:
                    continue
                acc = out[i + j]
                for k1, c1 in ai.items():
                    for k2, c2 in bj.items():
                        k = k1 + k2
                        s = acc.get(k, 0) + c1 * c2
                        if s:
                            acc[k] = s
                        elif k in acc:
                            del acc[k]
        return TSeries([MultiPoly(d) for d in out])

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = TSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "TSeries":
        """Multiply by t^k, keeping the truncation order."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if k == 0:
            return self
        n = self.order
        if k > n:
            return TSeries.zero(n)
        return TSeries([_P_ZERO] * k + self.coeffs[: n + 1 - k])

    def invert(self) -> "TSeries":
        """Multiplicative inverse; requires constant term +1 or -1."""
        c0 = self.coeffs[0]
        if not c0.is_const() or c0.const_value() not in (1, -1):
            raise ValueError("series is not invertible: constant term must be +1 or -1")
        inv0 = c0.const_value()
        out = [MultiPoly.const(inv0)]
        for n in range(1, self.order + 1):
            acc: dict[int, int] = {}
            for k in range(1, n + 1):
                ak = self.coeffs[k]._t
                if not ak:
                    continue
                bk = out[n - k]._t
                if not bk:
                    continue
                for k1, c1 in ak.items():
                    for k2, c2 in bk.items():
                        key = k1 + k2
                        s = acc.get(key, 0) + c1 * c2
                        if s:
                            acc[key] = s
                        elif key in acc:
                            del acc[key]
            out.append(MultiPoly({k: -inv0 * c for k, c in acc.items()}))
        return TSeries(out)

    def compose_t(self, inner: "TSeries") -> "TSeries":
        """Substitute inner(t) for t; inner must have zero constant term."""
        if not inner.coeffs[0].is_zero():
            raise ValueError("composition requires an inner series with zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        result = TSeries.from_poly(n, self.coeffs[0])
        power = TSeries.one(n)
        for k in range(1, n + 1):
            power = power * inner
            if power.is_zero():
                break
            result = result + power * self.coeffs[k]
        return result

    # -- substitutions ----------------------------------------------------

    def specialize(self, assignments: Mapping[str, int]) -> "TSeries":
        return TSeries([p.specialize(assignments) for p in self.coeffs])

    def subst_u_to_uv(self) -> "TSeries":
        return TSeries([p.subst_u_to_uv() for p in self.coeffs])

    def subst_u(self, repl: "TSeries") -> "TSeries":
        """Substitute a series for the variable u.

        Every coefficient must be polynomial in u (always true here), so the
        substitution is a finite sum of repl-powers.
        """
        n = min(self.order, repl.order)
        max_deg = max((p.max_degree("u") for p in self.coeffs[: n + 1]), default=0)
        powers = [TSeries.one(n)]
        for _ in range(max_deg):
            powers.append(powers[-1] * repl)
        out: list[dict[int, int]] = [dict() for _ in range(n + 1)]
        clear_u = ~(_MASK << 24)
        for i in range(n + 1):
            for k, c in self.coeffs[i]._t.items():
                eu = (k >> 24) & _MASK
                rest = k & clear_u
                pw = powers[eu]
                for j in range(n + 1 - i):
                    for k2, c2 in pw.coeffs[j]._t.items():
                        key = k2 + rest
                        acc = out[i + j]
                        s = acc.get(key, 0) + c * c2
                        if s:
                            acc[key] = s
                        elif key in acc:
                            del acc[key]
        return TSeries([MultiPoly(d) for d in out])

    def u_truncate(self, bound: int) -> "TSeries":
        """Drop every monomial whose u-exponent exceeds the bound."""
        return TSeries(
            [
                MultiPoly({k: c for k, c in p._t.items() if ((k >> 24) & _MASK) <= bound})
                for p in self.coeffs
            ]
        )

    def coefficient_of_var(self, var: str, exp: int) -> "TSeries":
        """Slice out the coefficient of var^exp at every t-order."""
        return TSeries([p.coefficient_of(var, exp) for p in self.coeffs])

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        entries = sorted(self.terms().items())
        return {
            "order": self.order,
            "vars": ["t", "u", "v", "z", "x"],
            "terms": [{"exp": list(exp), "coeff": str(c)} for exp, c in entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "TSeries":
        if obj.get("vars") != ["t", "u", "v", "z", "x"]:
            raise ValueError("unexpected variable list in series JSON")
        order = int(obj["order"])
        coeffs = [dict() for _ in range(order + 1)]
        for entry in obj["terms"]:
            n, eu, ev, ez, ex = entry["exp"]
            if not 0 <= n <= order:
                raise ValueError(f"t-exponent {n} outside order {order}")
            c = int(entry["coeff"])
            if c:
                coeffs[n][_pack((eu, ev, ez, ex))] = c
        return cls([MultiPoly(d) for d in coeffs])

    @classmethod
    def from_json(cls, text: str) -> "TSeries":
        return cls.from_json_obj(json.loads(text))

    # -- display ----------------------------------------------------------

    def __str__(self) -> str:
        parts = []
        for n, poly in enumerate(self.coeffs):
            if poly.is_zero():
                continue
            body = str(poly)
            if n == 0:
                parts.append(body)
            else:
                t = "t" if n == 1 else f"t^{n}"
                if poly.is_const() and poly.const_value() == 1:
                    parts.append(t)
                elif len(poly._t) == 1 and not body.startswith("-"):
                    parts.append(f"{body}*{t}")
                else:
                    parts.append(f"({body})*{t}")
        head = " + ".join(parts) if parts else "0"
        return f"{head} + O(t^{self.order + 1})"

    def __repr__(self) -> str:
        return f"TSeries({self})"


def scalar_coefficients(series: TSeries) -> list[int]:
    """Integer coefficient list of a series with constant coefficients.

    Raises ValueError if any coefficient still involves u, v, z, or x.
    """
    out = []
    for n, poly in enumerate(series.coeffs):
        if not poly.is_const():
            raise ValueError(f"coefficient of t^{n} is not a scalar: {poly}")
        out.append(poly.const_value())
    return out
