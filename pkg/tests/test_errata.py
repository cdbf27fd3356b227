"""The errata ledger: required entries present, derived corrections verified."""

from fractions import Fraction

from quadratica.errata import ERRATA, ERRATA_VERSION, ErrataEntry, get_entry
from quadratica.fibgroup import PHI
from quadratica.perfect import preimage
from quadratica.solver import Quadratic, shift_roots


def test_versioned_and_unique():
    assert ERRATA_VERSION
    ids = [entry.id for entry in ERRATA]
    assert len(ids) == len(set(ids))
    assert all(isinstance(entry, ErrataEntry) for entry in ERRATA)


def test_every_entry_is_complete():
    for entry in ERRATA:
        assert entry.section and entry.displayed and entry.derived and entry.oracle
        assert entry.kind in ("erratum", "note")


def test_shift_companion_entries_carry_corrections():
    plus = get_entry("shift-companion-plus")
    assert "1 - 2p" in plus.derived
    minus = get_entry("shift-companion-minus")
    assert "2p + 1" in minus.derived
    # and the corrections are what the code computes
    for p in (1, 2, 7):
        assert shift_roots(Quadratic(1, p, -p), 1) == Quadratic(1, -(2 - p), 1 - 2 * p)
        assert shift_roots(Quadratic(1, -p, p), 1) == Quadratic(1, -(p + 2), 2 * p + 1)


def test_phi_sixth_power_entry():
    entry = get_entry("phi-sixth-power")
    assert "8φ + 5" in entry.derived or "8*phi + 5" in entry.derived.replace("φ", "phi")
    assert PHI**6 == 8 * PHI + 5


def test_congruence_sign_entry():
    entry = get_entry("congruence-residue-sign")
    assert "b^2 - 4ac" in entry.derived


def test_perfect_table_row_entry():
    entry = get_entry("perfect-table-x2-1023")
    assert "-2049/2" in entry.derived
    assert preimage(2096128) == (1023, Fraction(-2049, 2))


def test_two_e_phi_entry():
    import math

    entry = get_entry("two-e-phi-sum")
    assert "8.67263163441788" in entry.derived
    assert abs(2 * (math.e + float(PHI)) - 8.67263163441788) < 1e-12


def test_case3_sum_entry():
    entry = get_entry("case3-sum-5mod6")
    assert "-1" in entry.derived


def test_case3_group_set_entry():
    from quadratica.fibgroup import Case, case_root

    entry = get_entry("case3-group-set-display")
    x = case_root(Case.III)
    displayed = {x**2, x**3, x**4, -(x**2), -(x**3), -(x**5)}
    corrected = {x**2, x**3, x**4, -(x**2), -(x**3), -(x**4)}
    assert len(displayed) == 5  # the duplicate the entry records
    assert corrected == {x**k for k in range(2, 8)}


def test_notes_are_marked():
    assert get_entry("monic-formula-scope").kind == "note"
    assert get_entry("metallic-4n1-scope").kind == "note"
    assert get_entry("fibonacci-indexing").kind == "note"
