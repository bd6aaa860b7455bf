"""
Bihomogeneous Forms on P^2 x P^2 - flagtwist

This module provides:
- monomial bases of bidegree (a,b) forms in p = (p0,p1,p2), l = (l0,l1,l2)
- BiForm: evaluation, products, the normal form modulo the flag form
  Phi = p0*l0 + p1*l1 + p2*l2, the j-image and the six partial derivatives
- BinaryForm and CurveParam: rational curves [s:t] -> F and exact
  restriction of forms along them

Monomials are 6-tuples (p-exponents, l-exponents). Within one bidegree every
monomial has the same total degree, so the global graded-lex order
p0 > p1 > p2 > l0 > l1 > l2 is plain lex order on the tuples; lists of
monomials are kept lex descending.
"""

from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from src.errors import BidegreeMismatch, DegenerateParam, NotOnFlag
from src.exact_matrix import rank_of
from src.gaussrat import ONE, ZERO, GaussRat, Scalar
from src.homog_poly import HomogPoly3, exponent_triples
from src.proj_point import ProjPoint, as_vector, is_zero_vector

Monomial = Tuple[int, int, int, int, int, int]
Bidegree = Tuple[int, int]

VARIABLE_NAMES = ("p0", "p1", "p2", "l0", "l1", "l2")


# ══════════════════════════════════════════════════════════════════════
# MONOMIAL BASES
# ══════════════════════════════════════════════════════════════════════

def monomial_basis(a: int, b: int) -> List[Monomial]:
    """
    All monomials of bidegree (a,b), lex descending.

    Args:
        a: Degree in p
        b: Degree in l

    Returns:
        List of C(a+2,2)*C(b+2,2) monomials

    Raises:
        ValueError: If a or b is negative

    Examples:
        >>> len(monomial_basis(1, 2))
        18
    """
    if a < 0 or b < 0:
        raise ValueError(f"Bidegree must be nonnegative, got ({a},{b})")
    return [pe + le for pe in exponent_triples(a) for le in exponent_triples(b)]


def normal_form_monomials(a: int, b: int) -> List[Monomial]:
    """Monomials of bidegree (a,b) not divisible by p0*l0."""
    return [m for m in monomial_basis(a, b) if m[0] == 0 or m[3] == 0]


def ambient_dimension(a: int, b: int) -> int:
    return comb(a + 2, 2) * comb(b + 2, 2)


# ══════════════════════════════════════════════════════════════════════
# BINARY FORMS AND CURVE PARAMETRIZATIONS
# ══════════════════════════════════════════════════════════════════════

class BinaryForm:
    """
    Homogeneous polynomial in (s,t); coefficient k multiplies s^(deg-k) t^k.
    """

    __slots__ = ("_degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Sequence[Scalar]):
        if len(coeffs) != degree + 1:
            raise BidegreeMismatch(
                f"Degree {degree} binary form needs {degree + 1} coefficients, got {len(coeffs)}"
            )
        self._degree = degree
        self._coeffs = tuple(GaussRat.coerce(c) for c in coeffs)

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls(degree, [ZERO] * (degree + 1))

    @classmethod
    def constant(cls, value: Scalar) -> "BinaryForm":
        return cls(0, [value])

    @classmethod
    def linear(cls, s_coeff: Scalar, t_coeff: Scalar) -> "BinaryForm":
        return cls(1, [s_coeff, t_coeff])

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def coefficients(self) -> Tuple[GaussRat, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return all(not c for c in self._coeffs)

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if other._degree != self._degree:
            raise BidegreeMismatch(
                f"Cannot add binary forms of degree {self._degree} and {other._degree}"
            )
        return BinaryForm(self._degree, [x + y for x, y in zip(self._coeffs, other._coeffs)])

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return self.scale(other)
        out = [ZERO] * (self._degree + other._degree + 1)
        for i, x in enumerate(self._coeffs):
            if not x:
                continue
            for j, y in enumerate(other._coeffs):
                if y:
                    out[i + j] = out[i + j] + x * y
        return BinaryForm(self._degree + other._degree, out)

    def scale(self, factor: Scalar) -> "BinaryForm":
        factor = GaussRat.coerce(factor)
        return BinaryForm(self._degree, [c * factor for c in self._coeffs])

    def evaluate(self, s: Scalar, t: Scalar) -> GaussRat:
        s, t = GaussRat.coerce(s), GaussRat.coerce(t)
        total = ZERO
        for k, c in enumerate(self._coeffs):
            if c:
                total = total + c * s ** (self._degree - k) * t ** k
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self._degree == other._degree and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._degree, self._coeffs))

    def __repr__(self) -> str:
        return f"BinaryForm({self._degree}, {[str(c) for c in self._coeffs]})"


def _map_from_vectors(vectors: Sequence[Sequence[Scalar]]) -> Tuple[BinaryForm, ...]:
    if len(vectors) == 1:
        v = as_vector(vectors[0])
        return tuple(BinaryForm.constant(x) for x in v)
    if len(vectors) == 2:
        vs, vt = as_vector(vectors[0]), as_vector(vectors[1])
        return tuple(BinaryForm.linear(x, y) for x, y in zip(vs, vt))
    raise DegenerateParam(f"A coordinate map needs 1 or 2 vectors, got {len(vectors)}")


def _map_is_nonvanishing(forms: Sequence[BinaryForm]) -> bool:
    if forms[0].degree == 0:
        return not is_zero_vector([f.coefficients[0] for f in forms])
    rows = [[f.coefficients[0] for f in forms], [f.coefficients[1] for f in forms]]
    return rank_of(rows, 3) == 2


class CurveParam:
    """
    A rational curve [s:t] -> (p(s,t), l(s,t)) inside F.

    Each coordinate map is either constant (degree 0) or linear (degree 1).

    Raises:
        DegenerateParam: If a map has mixed degrees or vanishes somewhere
        NotOnFlag: If p(s,t) . l(s,t) is not identically zero

    Examples:
        >>> gamma = CurveParam.from_vectors([[0, 1, 0], [0, 0, 1]],
        ...                                 [[0, 0, -1], [0, 1, 0]])
        >>> gamma.p_degree, gamma.l_degree
        (1, 1)
    """

    def __init__(self, p_map: Sequence[BinaryForm], l_map: Sequence[BinaryForm]):
        if len(p_map) != 3 or len(l_map) != 3:
            raise DegenerateParam("Coordinate maps need exactly 3 components")
        for name, forms in (("p", p_map), ("l", l_map)):
            degrees = {f.degree for f in forms}
            if len(degrees) != 1 or not degrees <= {0, 1}:
                raise DegenerateParam(f"{name}-map must be all constant or all linear")
            if not _map_is_nonvanishing(forms):
                raise DegenerateParam(f"{name}-map vanishes at some parameter value")
        self._p = tuple(p_map)
        self._l = tuple(l_map)
        incidence = self._p[0] * self._l[0] + self._p[1] * self._l[1] + self._p[2] * self._l[2]
        if not incidence.is_zero():
            raise NotOnFlag("Parametrized curve does not lie on p.l = 0")

    @classmethod
    def from_vectors(cls, p_vectors: Sequence[Sequence[Scalar]],
                     l_vectors: Sequence[Sequence[Scalar]]) -> "CurveParam":
        """Build from [v] (constant map) or [v_s, v_t] (s*v_s + t*v_t) per factor."""
        return cls(_map_from_vectors(p_vectors), _map_from_vectors(l_vectors))

    @property
    def p_map(self) -> Tuple[BinaryForm, ...]:
        return self._p

    @property
    def l_map(self) -> Tuple[BinaryForm, ...]:
        return self._l

    @property
    def p_degree(self) -> int:
        return self._p[0].degree

    @property
    def l_degree(self) -> int:
        return self._l[0].degree

    def point_at(self, s: Scalar, t: Scalar) -> Tuple[ProjPoint, ProjPoint]:
        """The point of F at parameter [s:t]."""
        p = ProjPoint([f.evaluate(s, t) for f in self._p])
        l = ProjPoint([f.evaluate(s, t) for f in self._l])
        return p, l

    def __repr__(self) -> str:
        return f"CurveParam(p_degree={self.p_degree}, l_degree={self.l_degree})"


class _PowerCache:
    """Powers of the six coordinate forms of a curve, computed on demand."""

    def __init__(self, curve: CurveParam):
        self._forms = curve.p_map + curve.l_map
        self._powers: List[List[BinaryForm]] = [
            [BinaryForm.constant(ONE)] for _ in range(6)
        ]

    def power(self, index: int, exponent: int) -> BinaryForm:
        table = self._powers[index]
        while len(table) <= exponent:
            table.append(table[-1] * self._forms[index])
        return table[exponent]

    def monomial(self, m: Monomial) -> BinaryForm:
        result = self.power(0, m[0])
        for index in range(1, 6):
            if m[index]:
                result = result * self.power(index, m[index])
        return result


def restriction_table(a: int, b: int, curve: CurveParam) -> Dict[Monomial, BinaryForm]:
    """Restriction of every monomial of bidegree (a,b) along curve."""
    cache = _PowerCache(curve)
    return {m: cache.monomial(m) for m in monomial_basis(a, b)}


# ══════════════════════════════════════════════════════════════════════
# BIHOMOGENEOUS FORMS
# ══════════════════════════════════════════════════════════════════════

def _coefficient_text(c: GaussRat) -> str:
    if c.is_real():
        return str(c.re)
    if c.re == 0:
        return f"{c.im}*I"
    sign = "+" if c.im > 0 else "-"
    return f"({c.re} {sign} {abs(c.im)}*I)"


class BiForm:
    """
    A bihomogeneous form of bidegree (a,b) with GaussRat coefficients.

    Attributes:
        bidegree (tuple): (a, b)

    Examples:
        >>> phi = flag_form()
        >>> phi.normal_form().is_zero()
        True
        >>> str(BiForm.parse("p1*l1 - p2*l2"))
        'p1*l1 - p2*l2'
    """

    __slots__ = ("_bidegree", "_coeffs")

    def __init__(self, bidegree: Bidegree, coeffs: Mapping[Monomial, Scalar] = None):
        """
        Args:
            bidegree: (a, b), both nonnegative
            coeffs: Monomial -> coefficient; zero coefficients are dropped

        Raises:
            BidegreeMismatch: If a monomial does not have the declared bidegree
        """
        a, b = bidegree
        if a < 0 or b < 0:
            raise BidegreeMismatch(f"Bidegree must be nonnegative, got {bidegree}")
        clean: Dict[Monomial, GaussRat] = {}
        for m, value in (coeffs or {}).items():
            m = tuple(m)
            if len(m) != 6 or min(m) < 0 or sum(m[:3]) != a or sum(m[3:]) != b:
                raise BidegreeMismatch(f"Monomial {m} does not have bidegree ({a},{b})")
            value = GaussRat.coerce(value)
            if value:
                clean[m] = value
        self._bidegree = (a, b)
        self._coeffs = clean

    # ══════════════════════════════════════════════════════════════════════
    # CONSTRUCTORS
    # ══════════════════════════════════════════════════════════════════════

    @classmethod
    def zero(cls, a: int, b: int) -> "BiForm":
        return cls((a, b))

    @classmethod
    def constant(cls, value: Scalar) -> "BiForm":
        return cls((0, 0), {(0, 0, 0, 0, 0, 0): value})

    @classmethod
    def monomial(cls, m: Monomial, value: Scalar = 1) -> "BiForm":
        return cls((sum(m[:3]), sum(m[3:])), {tuple(m): value})

    @classmethod
    def p_linear(cls, vector: Sequence[Scalar]) -> "BiForm":
        """The (1,0) form v0*p0 + v1*p1 + v2*p2."""
        v = as_vector(vector)
        return cls((1, 0), {(1, 0, 0, 0, 0, 0): v[0], (0, 1, 0, 0, 0, 0): v[1],
                            (0, 0, 1, 0, 0, 0): v[2]})

    @classmethod
    def l_linear(cls, vector: Sequence[Scalar]) -> "BiForm":
        """The (0,1) form v0*l0 + v1*l1 + v2*l2."""
        v = as_vector(vector)
        return cls((0, 1), {(0, 0, 0, 1, 0, 0): v[0], (0, 0, 0, 0, 1, 0): v[1],
                            (0, 0, 0, 0, 0, 1): v[2]})

    @classmethod
    def from_l_poly(cls, poly: HomogPoly3) -> "BiForm":
        """View a homogeneous polynomial in l as a (0,k) form."""
        return cls((0, poly.degree), {(0, 0, 0) + e: c for e, c in poly.coefficients.items()})

    @classmethod
    def from_vector(cls, bidegree: Bidegree, basis: Sequence[Monomial],
                    vector: Sequence[Scalar]) -> "BiForm":
        return cls(bidegree, dict(zip(basis, vector)))

    @classmethod
    def parse(cls, text: str) -> "BiForm":
        """
        Parse a form such as "p1*l1 - I*p2*l2" (variables p0..p2, l0..l2).

        Raises:
            ConfigParseError: If the text is not a polynomial in those variables
            BidegreeMismatch: If it is not bihomogeneous
        """
        from src.sympy_bridge import parse_bihomogeneous

        terms = parse_bihomogeneous(text)
        if not terms:
            raise BidegreeMismatch(f"Form {text!r} is zero, bidegree is undefined")
        bidegrees = {(sum(m[:3]), sum(m[3:])) for m in terms}
        if len(bidegrees) != 1:
            raise BidegreeMismatch(f"Form {text!r} is not bihomogeneous: {sorted(bidegrees)}")
        return cls(bidegrees.pop(), terms)

    @classmethod
    def from_record(cls, record: Mapping) -> "BiForm":
        a, b = record["bidegree"]
        coeffs = {
            tuple(term["pexp"]) + tuple(term["lexp"]): GaussRat.from_record(term["coeff"])
            for term in record["terms"]
        }
        return cls((a, b), coeffs)

    def to_record(self) -> Dict:
        return {
            "bidegree": list(self._bidegree),
            "terms": [
                {"pexp": list(m[:3]), "lexp": list(m[3:]), "coeff": c.to_record()}
                for m, c in self.terms()
            ],
        }

    # ══════════════════════════════════════════════════════════════════════
    # ACCESSORS
    # ══════════════════════════════════════════════════════════════════════

    @property
    def bidegree(self) -> Bidegree:
        return self._bidegree

    @property
    def coefficients(self) -> Dict[Monomial, GaussRat]:
        return dict(self._coeffs)

    def coefficient(self, m: Monomial) -> GaussRat:
        return self._coeffs.get(tuple(m), ZERO)

    def terms(self) -> List[Tuple[Monomial, GaussRat]]:
        """Nonzero terms in descending monomial order."""
        return sorted(self._coeffs.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._coeffs

    def to_vector(self, basis: Sequence[Monomial]) -> List[GaussRat]:
        """
        Coordinates with respect to a monomial list.

        Raises:
            BidegreeMismatch: If the support is not covered by basis
        """
        index = {m: i for i, m in enumerate(basis)}
        missing = [m for m in self._coeffs if m not in index]
        if missing:
            raise BidegreeMismatch(f"Monomials {missing[:3]} are not in the basis")
        v = [ZERO] * len(basis)
        for m, c in self._coeffs.items():
            v[index[m]] = c
        return v

    # ══════════════════════════════════════════════════════════════════════
    # ARITHMETIC
    # ══════════════════════════════════════════════════════════════════════

    def __add__(self, other: "BiForm") -> "BiForm":
        if not isinstance(other, BiForm):
            return NotImplemented
        if other._bidegree != self._bidegree:
            raise BidegreeMismatch(
                f"Cannot add bidegree {self._bidegree} and {other._bidegree}"
            )
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            out[m] = out.get(m, ZERO) + c
        return BiForm(self._bidegree, out)

    def __neg__(self) -> "BiForm":
        return self.scale(-1)

    def __sub__(self, other: "BiForm") -> "BiForm":
        return self + (-other)

    def __mul__(self, other) -> "BiForm":
        if isinstance(other, BiForm):
            return multiply(self, other)
        if isinstance(other, (GaussRat, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "BiForm":
        if isinstance(other, (GaussRat, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "BiForm":
        if exponent < 0:
            raise ValueError(f"Exponent must be nonnegative, got {exponent}")
        result = BiForm.constant(ONE)
        for _ in range(exponent):
            result = multiply(result, self)
        return result

    def scale(self, factor: Scalar) -> "BiForm":
        factor = GaussRat.coerce(factor)
        return BiForm(self._bidegree, {m: c * factor for m, c in self._coeffs.items()})

    def monic(self) -> "BiForm":
        """Scale so the coefficient of the largest monomial is 1."""
        if not self._coeffs:
            return self
        return self.scale(self._coeffs[max(self._coeffs)].inverse())

    def proportional_to(self, other: "BiForm") -> bool:
        """True iff both forms are nonzero and equal up to a scalar."""
        if self.is_zero() or other.is_zero():
            return False
        return self._bidegree == other._bidegree and self.monic() == other.monic()

    # ══════════════════════════════════════════════════════════════════════
    # OPERATIONS
    # ══════════════════════════════════════════════════════════════════════

    def evaluate(self, p: Sequence[Scalar], l: Sequence[Scalar]) -> GaussRat:
        return evaluate(self, p, l)

    def normal_form(self) -> "BiForm":
        return normal_form(self)

    def is_zero_on_flag(self) -> bool:
        return normal_form(self).is_zero()

    def j_image(self) -> "BiForm":
        return j_image(self)

    def gradient(self) -> Tuple["BiForm", ...]:
        return gradient6(self)

    def restrict(self, curve: CurveParam) -> BinaryForm:
        return restrict_to_curve(self, curve)

    def p_coefficients(self) -> Tuple[HomogPoly3, HomogPoly3, HomogPoly3]:
        """
        For a (1,d) form F = sum p_i A_i(l), return (A_0, A_1, A_2).

        Raises:
            BidegreeMismatch: If the p-degree is not 1
        """
        a, b = self._bidegree
        if a != 1:
            raise BidegreeMismatch(f"Expected p-degree 1, got bidegree {self._bidegree}")
        parts: List[Dict] = [{}, {}, {}]
        for m, c in self._coeffs.items():
            i = m[:3].index(1)
            parts[i][m[3:]] = c
        return tuple(HomogPoly3(b, part) for part in parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiForm):
            return NotImplemented
        return self._bidegree == other._bidegree and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._bidegree, frozenset(self._coeffs.items())))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for m, c in self.terms():
            names = []
            for name, e in zip(VARIABLE_NAMES, m):
                if e == 1:
                    names.append(name)
                elif e > 1:
                    names.append(f"{name}**{e}")
            body = "*".join(names)
            negative = c.is_real() and c.re < 0
            magnitude = -c if negative else c
            if not body:
                text = _coefficient_text(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{_coefficient_text(magnitude)}*{body}"
            pieces.append(("-" if negative else "+", text))
        first_sign, first_text = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_text
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"BiForm({self._bidegree}, {self})"



def flag_form() -> BiForm:
    """Phi = p0*l0 + p1*l1 + p2*l2."""
    return BiForm((1, 1), {(1, 0, 0, 1, 0, 0): 1, (0, 1, 0, 0, 1, 0): 1, (0, 0, 1, 0, 0, 1): 1})


def evaluate(form: BiForm, p: Sequence[Scalar], l: Sequence[Scalar]) -> GaussRat:
    """
    Value of form at the coordinate vectors p and l.

    ProjPoint arguments are evaluated at their canonical representatives,
    so only the zero/nonzero status is projectively meaningful.

    Raises:
        BidegreeMismatch: If p or l does not have three coordinates
    """
    try:
        x = as_vector(p) + as_vector(l)
    except ValueError as exc:
        raise BidegreeMismatch(str(exc)) from exc
    total = ZERO
    for m, c in form.coefficients.items():
        term = c
        for xi, e in zip(x, m):
            if e:
                term = term * xi ** e
        total = total + term
    return total


def multiply(f: BiForm, g: BiForm) -> BiForm:
    """Product of two forms; bidegrees add."""
    out: Dict[Monomial, GaussRat] = {}
    for m, c in f.coefficients.items():
        for n, d in g.coefficients.items():
            key = tuple(x + y for x, y in zip(m, n))
            out[key] = out.get(key, ZERO) + c * d
    a, b = f.bidegree
    c_, d_ = g.bidegree
    return BiForm((a + c_, b + d_), out)


def normal_form(form: BiForm) -> BiForm:
    """
    Reduce modulo Phi by rewriting p0*l0 -> -p1*l1 - p2*l2 until no
    monomial is divisible by p0*l0.

    Each rewrite lowers min(exp p0, exp l0) of the rewritten monomial, so
    the loop terminates.

    Examples:
        >>> normal_form(flag_form()).is_zero()
        True
    """
    work = form.coefficients
    pending = [m for m in work if m[0] and m[3]]
    while pending:
        m = pending.pop()
        c = work.pop(m, None)
        if c is None:
            continue
        base = (m[0] - 1, m[1], m[2], m[3] - 1, m[4], m[5])
        targets = (
            (base[0], base[1] + 1, base[2], base[3], base[4] + 1, base[5]),
            (base[0], base[1], base[2] + 1, base[3], base[4], base[5] + 1),
        )
        for target in targets:
            value = work.get(target, ZERO) - c
            if value:
                work[target] = value
            else:
                work.pop(target, None)
            if target[0] and target[3]:
                pending.append(target)
    return BiForm(form.bidegree, work)


def j_image(form: BiForm) -> BiForm:
    """
    The form c*p^alpha*l^beta -> conj(c)*p^beta*l^alpha, of bidegree (b,a).

    Satisfies j_image(F)(p, l) = conj(F(conj l, conj p)).
    """
    a, b = form.bidegree
    return BiForm((b, a), {m[3:] + m[:3]: c.conj() for m, c in form.coefficients.items()})


def gradient6(form: BiForm) -> Tuple[BiForm, ...]:
    """
    The partial derivatives with respect to p0, p1, p2, l0, l1, l2.

    A derivative in a variable of degree zero is the zero form of the same
    bidegree.
    """
    a, b = form.bidegree
    out = []
    for index in range(6):
        if index < 3:
            target = (max(0, a - 1), b)
        else:
            target = (a, max(0, b - 1))
        coeffs: Dict[Monomial, GaussRat] = {}
        for m, c in form.coefficients.items():
            e = m[index]
            if e:
                lowered = list(m)
                lowered[index] -= 1
                coeffs[tuple(lowered)] = c * e
        out.append(BiForm(target, coeffs))
    return tuple(out)


def restrict_to_curve(form: BiForm, curve: CurveParam) -> BinaryForm:
    """
    Substitute the curve's coordinate maps into form.

    The result has degree a*deg(p-map) + b*deg(l-map) and is identically
    zero iff the curve lies in {form = 0}.
    """
    a, b = form.bidegree
    degree = a * curve.p_degree + b * curve.l_degree
    cache = _PowerCache(curve)
    total = BinaryForm.zero(degree)
    for m, c in form.coefficients.items():
        total = total + cache.monomial(m).scale(c)
    return total


def span_contains(forms: Iterable[BiForm], candidate: BiForm) -> bool:
    """True iff normal_form(candidate) lies in the span of the forms' normal forms."""
    a, b = candidate.bidegree
    basis = normal_form_monomials(a, b)
    rows = [normal_form(f).to_vector(basis) for f in forms]
    target = normal_form(candidate).to_vector(basis)
    if not rows:
        return all(not x for x in target)
    return rank_of(rows + [target], len(basis)) == rank_of(rows, len(basis))
