"""Re-derivation of the five-block rank counts from linear systems.

Taken as axioms:

* ansatz: Γ_i is a polynomial in x = 2^k of degree 0, 0, 1, 1, 2, 2, 3, 3,
  4, 4, 5 for i = 0..10;
* vanishing: Γ_i(k) = 0 for 5 <= k < i (i = 6..10), i.e. a rank above
  the column count is impossible.

Fixed inputs: Γ_0..Γ_5 from the general-n formulas at n = 5, Γ_10 from the
full-rank product, and the three moment lines (q = 0, 1, 2) at n = 5.  All
other coefficients are solved for, step by step, in exact arithmetic.  The
constants printed alongside each step of the original derivation are kept
as ``PrintedCheck`` records and compared, never used as inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from persym.formulas import N5_POLYS, general_poly
from persym.linsolve import solve_exact
from persym.moments import N5_MOMENT_POLYS, moment_rhs
from persym.poly import Poly

AXIOMS = (
    "ansatz: Γ_i is a polynomial in 2^k of degree 0,0,1,1,2,2,3,3,4,4,5 for i = 0..10",
    "vanishing: Γ_i(k) = 0 for 5 <= k < i, i = 6..10",
)

# Unknown coefficient names per rank, lowest degree first.
UNKNOWN_SLOTS = {
    6: ("d_6", "c_6", "b_6", "a_6"),
    7: ("d_7", "c_7", "b_7", "a_7"),
    8: ("e_8", "d_8", "c_8", "b_8", "a_8"),
    9: ("e_9", "d_9", "c_9", "b_9", "a_9"),
}


class DerivationError(AssertionError):
    pass


@dataclass(frozen=True)
class LinearSystem:
    step: str
    unknowns: tuple[str, ...]
    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    solution: tuple[Fraction, ...]


@dataclass(frozen=True)
class PrintedCheck:
    name: str
    derived: Fraction
    printed: Fraction

    @property
    def passed(self) -> bool:
        return self.derived == self.printed


@dataclass(frozen=True)
class CoefficientTable:
    a_6: int
    b_6: int
    c_6: int
    d_6: int
    a_7: int
    b_7: int
    c_7: int
    d_7: int
    a_8: int
    b_8: int
    c_8: int
    d_8: int
    e_8: int
    a_9: int
    b_9: int
    c_9: int
    d_9: int
    e_9: int
    systems: tuple[LinearSystem, ...] = field(default=(), compare=False)
    printed_checks: tuple[PrintedCheck, ...] = field(default=(), compare=False)
    balance_residuals: tuple[tuple[str, Fraction], ...] = field(default=(), compare=False)

    def coefficients(self) -> dict[str, int]:
        return {name: getattr(self, name) for slots in UNKNOWN_SLOTS.values() for name in reversed(slots)}


class _Ansatz:
    """Γ_0..Γ_10 where each coefficient is a known number or an unknown name."""

    def __init__(self) -> None:
        self.known: dict[str, Fraction] = {}
        self.slots: list[tuple] = []
        for i in range(6):
            self.slots.append(tuple(Fraction(c) for c in general_poly(5, i).coeffs))
        for i in range(6, 10):
            self.slots.append(UNKNOWN_SLOTS[i])
        top = Poly.from_roots([2**j for j in range(5, 10)], lead=2**5)
        self.slots.append(tuple(Fraction(c) for c in top.coeffs))
        self.moments = [moment_rhs(5, m, Poly.x()) * 2 ** (10 * m) for m in range(3)]

    def value(self, slot):
        if isinstance(slot, str):
            return self.known.get(slot)
        return slot

    def coeff(self, i: int, d: int):
        s = self.slots[i]
        return s[d] if d < len(s) else Fraction(0)

    def _linear_form(self, terms, const, unknowns):
        # terms: iterable of (weight, slot); returns row over unknowns and moved constant.
        row = {u: Fraction(0) for u in unknowns}
        for w, slot in terms:
            if isinstance(slot, str) and slot in row:
                row[slot] += w
                continue
            v = self.value(slot)
            if v is None:
                raise DerivationError(f"coefficient {slot} needed before it is known")
            const -= w * v
        return tuple(row[u] for u in unknowns), const

    def moment_equation(self, m: int, d: int, unknowns):
        terms = [(Fraction(2 ** (m * (10 - i))), self.coeff(i, d)) for i in range(11)]
        return self._linear_form(terms, Fraction(self.moments[m].coeff(d)), unknowns)

    def vanishing_equation(self, i: int, k: int, unknowns):
        x = 2**k
        terms = [(Fraction(x**d), s) for d, s in enumerate(self.slots[i])]
        return self._linear_form(terms, Fraction(0), unknowns)

    def poly(self, i: int) -> Poly:
        vals = [self.value(s) for s in self.slots[i]]
        if any(v is None for v in vals):
            raise DerivationError(f"Γ_{i} still has unknown coefficients")
        return Poly(vals)


def _solve(ans: _Ansatz, step: str, unknowns, equations) -> LinearSystem:
    A = tuple(row for row, _ in equations)
    b = tuple(rhs for _, rhs in equations)
    sol = solve_exact(A, b)
    for name, v in zip(unknowns, sol):
        if v.denominator != 1:
            raise DerivationError(f"{step}: {name} = {v} is not an integer")
        ans.known[name] = v
    return LinearSystem(step, tuple(unknowns), A, b, tuple(sol))


def derive_theorem() -> CoefficientTable:
    ans = _Ansatz()
    systems: list[LinearSystem] = []
    printed: list[PrintedCheck] = []

    def expect(name, derived, value):
        printed.append(PrintedCheck(name, Fraction(derived), Fraction(value)))

    for m, line in enumerate(N5_MOMENT_POLYS):
        for d in range(6):
            expect(f"moment line m={m}, coefficient of 2^({d}k)", ans.moments[m].coeff(d), line.coeff(d))

    # Leading 2^(4k) coefficients of ranks 8, 9 from the three moment lines.
    u = ("a_8", "a_9")
    eqs = [ans.moment_equation(m, 4, u) for m in range(3)]
    systems.append(_solve(ans, "step 4: a_8, a_9", u, eqs))
    for m, v in enumerate((992 * 2**5, 992 * 2**5 + 1023 * 2**5, 992 * 2**5 + 3162 * 2**5)):
        expect(f"step 4 rhs[{m}]", eqs[m][1], v)
    expect("a_8", ans.known["a_8"], 496)
    expect("a_9", ans.known["a_9"], 31248)

    # Rank 9 vanishes at k = 5..8; with a_9 known that fixes the quartic.
    u = ("b_9", "c_9", "d_9", "e_9")
    eqs = [ans.vanishing_equation(9, k, u) for k in range(5, 9)]
    systems.append(_solve(ans, "step 5: Γ_9 from vanishing at k=5..8", u, eqs))
    factored = Poly.from_roots([2**j for j in range(5, 9)], lead=31248)
    expect("Γ_9 equals 31248·(x-2^5)(x-2^6)(x-2^7)(x-2^8)", 0 if ans.poly(9) == factored else 1, 0)

    u = ("a_6", "a_7", "b_8")
    eqs = [ans.moment_equation(m, 3, u) for m in range(3)]
    systems.append(_solve(ans, "step 6: a_6, a_7, b_8", u, eqs))
    for m, v in enumerate(
        (
            31248 * 480 - 317440 * 2**5,
            2 * 31248 * 480 - 2**5 * 317440,
            2**2 * 31248 * 480 - 2**5 * 317440 + 1045320 * 2**5,
        )
    ):
        expect(f"step 6 rhs[{m}]", eqs[m][1], v)
    expect("a_6", ans.known["a_6"], 1240)
    expect("a_7", ans.known["a_7"], 115320)
    expect("b_8", ans.known["b_8"], 496 * 9525)

    u = ("c_8", "d_8", "e_8")
    eqs = [ans.vanishing_equation(8, k, u) for k in (5, 6, 7)]
    systems.append(_solve(ans, "step 7: c_8, d_8, e_8 from vanishing at k=5,6,7", u, eqs))
    for m, v in enumerate((-(2**15) * 4740272, -(2**18) * 4756144, -(2**21) * 4787888)):
        expect(f"step 7 rhs[{m}]", eqs[m][1], v)
    expect("c_8", ans.known["c_8"], -(2**5) * 33626320)
    expect("d_8", ans.known["d_8"], 2**10 * 67570080)
    expect("e_8", ans.known["e_8"], -(2**15) * 38684032)

    u = ("b_6", "b_7")
    eqs = [ans.moment_equation(m, 2, u) for m in range(3)]
    systems.append(_solve(ans, "step 8: b_6, b_7", u, eqs))
    for m, v in enumerate((136354120, 1122567040, 9488281600)):
        expect(f"step 8 rhs[{m}]", eqs[m][1], v)
    expect("b_6", ans.known["b_6"], 1240 * 3199)
    expect("b_7", ans.known["b_7"], 115320 * 1148)

    u = ("c_7", "d_7")
    eqs = [ans.vanishing_equation(7, k, u) for k in (5, 6)]
    systems.append(_solve(ans, "step 9: c_7, d_7 from vanishing at k=5,6", u, eqs))
    for m, v in enumerate((-(2**15) * 4252425, -(2**17) * 4367745)):
        expect(f"step 9 rhs[{m}]", eqs[m][1], v)
    expect("c_7", ans.known["c_7"], -(2**10) * 13218555)
    expect("c_7 (factored)", ans.known["c_7"], 115320 * -(2**7) * 917)
    expect("d_7", ans.known["d_7"], 2**15 * 8966130)
    expect("d_7 (factored)", ans.known["d_7"], 115320 * 2**12 * 622)

    # The 2^k coefficient of the plain sum over ranks must vanish.
    u = ("c_6",)
    eqs = [ans.moment_equation(0, 1, u)]
    systems.append(_solve(ans, "step 10: c_6 from the 2^k balance of the rank sum", u, eqs))
    expect("c_6", ans.known["c_6"], 2**10 * 606515)
    expect("c_6 (factored)", ans.known["c_6"], 1240 * 3913 * 2**7)

    u = ("d_6",)
    eqs = [ans.vanishing_equation(6, 5, u)]
    systems.append(_solve(ans, "step 11: d_6 from vanishing at k=5", u, eqs))
    expect("d_6", ans.known["d_6"], -1240 * (2**15 + 3199 * 2**10 + 3913 * 2**12))
    expect("d_6 (factored)", ans.known["d_6"], -1240 * 18883 * 2**10)

    # Equations not used by any step: every moment line at every degree.
    balances = []
    for m in range(3):
        for d in range(6):
            _, r = ans.moment_equation(m, d, ())
            balances.append((f"moment line m={m}, 2^({d}k)", -r))

    coeffs = {name: int(ans.known[name]) for slots in UNKNOWN_SLOTS.values() for name in slots}
    return CoefficientTable(
        **coeffs,
        systems=tuple(systems),
        printed_checks=tuple(printed),
        balance_residuals=tuple(balances),
    )


def assemble_gamma(table: CoefficientTable) -> tuple[Poly, ...]:
    """Γ_0..Γ_10 as polynomials in 2^k, checked against the closed-form tables."""
    c = table.coefficients()
    polys = [general_poly(5, i) for i in range(6)]
    for i in range(6, 10):
        polys.append(Poly(c[name] for name in UNKNOWN_SLOTS[i]))
    polys.append(Poly.from_roots([2**j for j in range(5, 10)], lead=2**5))
    for i, (got, want) in enumerate(zip(polys, N5_POLYS)):
        if got != want:
            raise DerivationError(f"Γ_{i}: derived {got.pretty()} but closed form is {want.pretty()}")
    return tuple(polys)
