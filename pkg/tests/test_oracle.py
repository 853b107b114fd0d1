import permspec as ps
from permspec.oracle import (
    AuditReport,
    audit_specification,
    class_members,
    member_of_restriction,
)
from permspec.restrictions import Equation, restriction

P = ps.perm


def R(delta="", avoid=(), contain=()):
    return restriction(delta, [P(a) for a in avoid], [P(c) for c in contain])


def test_enumerate_fixtures():
    assert ps.enumerate_class([P("21")], 4) == [P("1234")]
    assert len(ps.enumerate_class([P("132")], 4)) == 14
    assert len(ps.enumerate_class([P("2413"), P("3142")], 4)) == 22


def test_members_are_hereditary():
    members = class_members([P("132")], 6)
    for n in range(2, 7):
        smaller = set(members[n - 1])
        for p in members[n]:
            for skip in range(n):
                vals = p.values[:skip] + p.values[skip + 1 :]
                assert ps.normalize(vals) in smaller


def test_simples_fixtures():
    big = [P(x) for x in ("1243", "2341", "2413", "41352", "531642")]
    assert ps.simples_in_class(big, 8) == {P("3142")}
    assert ps.simples_in_class([P("2413"), P("3142")], 8) == set()
    assert ps.simples_in_class([P("123456789")], 4) == {P("2413"), P("3142")}


def test_simples_monotone_in_bound():
    basis = [P("1243"), P("2413"), P("531642"), P("41352")]
    prev = set()
    for bound in (4, 5, 6, 7):
        cur = ps.simples_in_class(basis, bound)
        assert prev <= cur
        prev = cur
    assert prev == {P("3142")}


def test_member_of_restriction_fixtures():
    assert member_of_restriction(P("1"), R("+", ("21",)), [])
    assert not member_of_restriction(P("12"), R("+"), [])
    assert member_of_restriction(P("546312"), R("", (), ("21",)), [P("3142")])
    assert not member_of_restriction(P("3142"), R(), [])
    assert member_of_restriction(P("3142"), R(), [P("3142")])


def test_audit_clean_on_av132(av132_spec, av132_basis):
    report = audit_specification(av132_spec, av132_basis.patterns, 7)
    assert report.passed, str(report)
    assert report.equations_checked == 5


def test_audit_flags_forged_disjointness(sep_subclass_basis, no_simples):
    system = ps.ambiguous_system(sep_subclass_basis, no_simples)
    lhs = system.root
    eq = system.equations[lhs]
    assert not eq.disjoint
    system.equations[lhs] = Equation(eq.lhs, eq.has_one, eq.terms, disjoint=True)
    report = audit_specification(system, sep_subclass_basis.patterns, 4)
    assert not report.passed
    assert any("overlapping" in v and "size 2" in v for v in report.violations)
    assert any("1 2" in v for v in report.violations)


def test_audit_flags_incompleteness():
    basis = ps.basis_of([P("21")])
    lhs = restriction("", [P("21")])
    system = ps.EquationSystem((), lhs)
    system.equations[lhs] = Equation(lhs, False, (), disjoint=True)
    report = audit_specification(system, basis.patterns, 3)
    assert not report.passed
    assert any("mismatch" in v for v in report.violations)


def test_audit_union_semantics_for_ambiguous_systems(big_basis, big_simples):
    system = ps.ambiguous_system(big_basis, big_simples)
    report = audit_specification(system, big_basis.patterns, 6)
    assert report.passed, str(report)


def test_report_formatting():
    rep = AuditReport(nmax=5)
    rep.equations_checked = 2
    assert "no violations" in str(rep)
    rep.violations.append("boom")
    assert "boom" in str(rep)
