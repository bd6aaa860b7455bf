"""
Linear Systems |I_A(a,b)| - flagtwist

Condition matrices, h0/h1/chi, bases of normal forms, random members and
exact divisibility modulo the flag form.

h0 is the nullity of the condition matrix minus the dimension of the
Phi-multiples, which every conic condition kills. Each conic contributes
the a+b+1 coefficients of the restriction of every ambient monomial along
its parametrization, so no sample point enters the computation.
"""

import logging
import random
from typing import Dict, List, Optional, Sequence, Tuple

from src.bipoly import (
    BiForm,
    flag_form,
    monomial_basis,
    multiply,
    normal_form,
    normal_form_monomials,
    restriction_table,
)
from src.config_generator import random_gaussrat
from src.errors import (
    BadParams,
    BidegreeMismatch,
    EmptySystem,
    LinearAlgebraError,
    NotDisjoint,
    ZeroDivisor,
)
from src.exact_matrix import ExactMatrix
from src.flag_geometry import Configuration
from src.formulas import euler_characteristic, flag_multiple_dim
from src.settings import FlagTwistSettings, get_settings

logger = logging.getLogger(__name__)

Bidegree = Tuple[int, int]


class LinearSystem:
    """
    The linear system of bidegree (a,b) forms on F vanishing on a configuration.

    Attributes:
        config (Configuration): The conics imposing conditions
        bidegree (tuple): (a, b)
        condition_matrix (ExactMatrix): n(a+b+1) rows, one column per monomial
        h0 (int): Dimension of H0(I_A(a,b))
        h1 (int): h0 - chi, never negative
        chi (int): h0(O_F(a,b)) - n(a+b+1)
        basis (list): h0 independent normal forms spanning the sections

    Examples:
        >>> from src.flag_geometry import make_twistor_fiber
        >>> from src.proj_point import ProjPoint
        >>> A = Configuration([make_twistor_fiber(ProjPoint([1, 0, 0]))])
        >>> LinearSystem(A, (1, 1)).dims()
        (5, 0, 5)
    """

    def __init__(self, config: Configuration, bidegree: Bidegree):
        """
        Raises:
            BadParams: If the bidegree is negative or (0,0)
            NotDisjoint: If two conics of config meet
        """
        a, b = bidegree
        if a < 0 or b < 0 or (a, b) == (0, 0):
            raise BadParams(f"Bidegree must be nonnegative and not (0,0), got {bidegree}")
        if not config.pairwise_disjoint:
            raise NotDisjoint(f"{config!r} has meeting conics")

        self._config = config
        self._bidegree = (a, b)
        self._monomials = monomial_basis(a, b)

        rows = []
        for conic in config:
            table = restriction_table(a, b, conic.parametrization())
            for k in range(a + b + 1):
                rows.append([table[m].coefficients[k] for m in self._monomials])
        self._matrix = ExactMatrix(rows, cols=len(self._monomials))

        self._h0 = self._matrix.nullity() - flag_multiple_dim(a, b)
        self._chi = euler_characteristic(config.n, a, b)
        self._h1 = self._h0 - self._chi
        if self._h1 < 0 or self._h0 < 0:
            raise LinearAlgebraError(
                f"Impossible dimensions h0={self._h0}, h1={self._h1} for {config!r} at {bidegree}"
            )
        self._basis: Optional[List[BiForm]] = None
        logger.debug("system n=%d (%d,%d): h0=%d h1=%d chi=%d",
                     config.n, a, b, self._h0, self._h1, self._chi)

    @property
    def config(self) -> Configuration:
        return self._config

    @property
    def bidegree(self) -> Bidegree:
        return self._bidegree

    @property
    def condition_matrix(self) -> ExactMatrix:
        return self._matrix

    @property
    def h0(self) -> int:
        return self._h0

    @property
    def h1(self) -> int:
        return self._h1

    @property
    def chi(self) -> int:
        return self._chi

    def dims(self) -> Tuple[int, int, int]:
        return self._h0, self._h1, self._chi

    @property
    def basis(self) -> List[BiForm]:
        """Row-reduced normal forms of the nullspace; Phi-multiples drop out."""
        if self._basis is None:
            nf_monomials = normal_form_monomials(*self._bidegree)
            vectors = [
                normal_form(BiForm.from_vector(self._bidegree, self._monomials, v)).to_vector(nf_monomials)
                for v in self._matrix.nullspace()
            ]
            rows, _ = ExactMatrix(vectors, cols=len(nf_monomials)).rref()
            if len(rows) != self._h0:
                raise LinearAlgebraError(
                    f"Basis has {len(rows)} forms but h0 = {self._h0}"
                )
            self._basis = [BiForm.from_vector(self._bidegree, nf_monomials, row) for row in rows]
        return list(self._basis)

    def to_record(self) -> Dict:
        """Report fragment for this system."""
        return {
            "n": self._config.n,
            "bidegree": list(self._bidegree),
            "h0": self._h0,
            "h1": self._h1,
            "chi": self._chi,
            "flags": self._config.summary() if self._config.n else {},
        }

    def __repr__(self) -> str:
        return f"LinearSystem(n={self._config.n}, bidegree={self._bidegree}, h0={self._h0}, h1={self._h1})"


def ideal_dims(config: Configuration, bidegree: Bidegree) -> Tuple[int, int, int]:
    """(h0, h1, chi) of I_A(a,b)."""
    return LinearSystem(config, bidegree).dims()


def system_basis(config: Configuration, bidegree: Bidegree) -> List[BiForm]:
    """h0 independent normal forms spanning H0(I_A(a,b))."""
    return LinearSystem(config, bidegree).basis


def random_member(basis: Sequence[BiForm], seed: int,
                  settings: Optional[FlagTwistSettings] = None) -> BiForm:
    """
    A random combination of basis forms with nonzero Gaussian-rational weights.

    Raises:
        EmptySystem: If basis is empty
    """
    if not basis:
        raise EmptySystem("The linear system has no sections")
    settings = settings or get_settings()
    rng = random.Random(seed)
    member = BiForm.zero(*basis[0].bidegree)
    for form in basis:
        weight = random_gaussrat(rng, settings)
        while not weight:
            weight = random_gaussrat(rng, settings)
        member = member + form.scale(weight)
    return normal_form(member)


# ══════════════════════════════════════════════════════════════════════
# DIVISIBILITY MODULO PHI
# ══════════════════════════════════════════════════════════════════════

def divide_with_witness(divisor: BiForm, form: BiForm) -> Optional[Tuple[BiForm, BiForm]]:
    """
    Solve form = divisor * H + Phi * K for (H, K).

    Returns:
        (H, K), or None when no solution exists

    Raises:
        ZeroDivisor: If divisor is a multiple of Phi
        BidegreeMismatch: If divisor's bidegree exceeds form's
    """
    if normal_form(divisor).is_zero():
        raise ZeroDivisor(f"{divisor} vanishes on F")
    (c, d), (a, b) = divisor.bidegree, form.bidegree
    if c > a or d > b:
        raise BidegreeMismatch(f"Cannot divide bidegree {form.bidegree} by {divisor.bidegree}")

    target = monomial_basis(a, b)
    h_monomials = monomial_basis(a - c, b - d)
    k_monomials = monomial_basis(a - 1, b - 1) if a >= 1 and b >= 1 else []
    phi = flag_form()
    columns = [multiply(divisor, BiForm.monomial(h)).to_vector(target) for h in h_monomials]
    columns += [multiply(phi, BiForm.monomial(k)).to_vector(target) for k in k_monomials]
    rows = [[col[i] for col in columns] for i in range(len(target))]

    x = ExactMatrix(rows, cols=len(columns)).solve(form.to_vector(target))
    if x is None:
        return None
    h = BiForm.from_vector((a - c, b - d), h_monomials, x[:len(h_monomials)])
    k_bidegree = (a - 1, b - 1) if k_monomials else (max(a - 1, 0), max(b - 1, 0))
    k = BiForm.from_vector(k_bidegree, k_monomials, x[len(h_monomials):])
    return h, k


def divides(divisor: BiForm, form: BiForm) -> Optional[BiForm]:
    """
    Quotient H with form = divisor * H modulo Phi, or None.

    Examples:
        l0 divides p2*l0 with quotient p2; l0 does not divide p1*l1 - p2*l2.
    """
    result = divide_with_witness(divisor, form)
    return None if result is None else result[0]


def complete_intersection_h0(divisor: BiForm, bidegree: Bidegree) -> int:
    """
    Sections of O(a,b) on the surface {divisor = 0} of F, as the ambient
    dimension minus the rank of (Phi, divisor) in bidegree (a,b).
    """
    a, b = bidegree
    c, d = divisor.bidegree
    target = monomial_basis(a, b)
    rows = []
    if a >= 1 and b >= 1:
        phi = flag_form()
        rows += [multiply(phi, BiForm.monomial(m)).to_vector(target) for m in monomial_basis(a - 1, b - 1)]
    if a >= c and b >= d:
        rows += [multiply(divisor, BiForm.monomial(m)).to_vector(target) for m in monomial_basis(a - c, b - d)]
    rank = ExactMatrix(rows, cols=len(target)).rank() if rows else 0
    return len(target) - rank
