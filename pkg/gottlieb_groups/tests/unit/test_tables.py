import pytest
import yaml

from gottlieb_groups.errors import NotCoveredError
from gottlieb_groups.fga import FgAbGroup, Whole, Zero
from gottlieb_groups.tables import (
    KP2,
    CatalogError,
    DuplicateKeyError,
    ParseError,
    SchemaMismatchError,
    SpaceId,
    center_fact,
    export_catalog,
    export_rows,
    lie_group,
    load_catalog,
    parse_catalog,
    pi_sphere,
    pi_sphere_local,
    sp_group,
    sphere,
    split_top,
    su_group,
)

HEADER = "schema|1\n"
PI6_S3 = "sphere|3|6|0|12|nu'(3):4;alpha1(3):3|Toda, Composition Methods\n"


def _catalog(*lines: str):
    return parse_catalog(HEADER + "".join(lines))


class TestParsing:
    def test_minimal_catalog(self):
        cat = _catalog(PI6_S3)
        entry = cat.get(sphere(3), 6)
        assert entry.group == FgAbGroup(0, (12,))
        assert [str(g) for g in entry.generators] == ["nu'(3)", "alpha1(3)"]
        assert entry.label == "π_6(S^3)"
        assert len(cat) == 1
        assert len(cat.checksum) == 64

    def test_comments_and_blank_lines(self):
        cat = parse_catalog("# header\n\n" + HEADER + "# a comment\n" + PI6_S3)
        assert len(cat) == 1

    def test_empty_input_is_empty_catalog(self):
        assert len(parse_catalog("")) == 0

    def test_canonical_orders_when_none_given(self):
        cat = _catalog("sphere|3|12|0|2;2|cmp(eta(3),eps(4));mu(3)|Toda\n")
        assert cat.get(sphere(3), 12).group.torsion == (2, 2)

    def test_missing_schema(self):
        with pytest.raises(SchemaMismatchError):
            parse_catalog(PI6_S3)

    def test_wrong_schema(self):
        with pytest.raises(SchemaMismatchError):
            parse_catalog("schema|2\n" + PI6_S3)

    @pytest.mark.parametrize("line, fragment", [
        ("sphere|3|6|0|12\n", "fields"),
        ("sphere|3|6|0|4;6|nu'(3):4;alpha1(3):3|Toda\n", "invariant-factor"),
        ("sphere|3|6|0|12|nu'(3):4;alpha1(3):3|\n", "empty citation"),
        ("sphere|3|6|0|12|nu'(3):4;alpha1(3)|Toda\n", "every generator"),
        ("sphere|3|6|0|2|eta(3)|Toda\n", "Inconsistent dimensions"),
        ("sphere|3|six|0|2|eta(3)|Toda\n", "not an integer"),
        ("planet|3|6|0|2||Toda\n", "unknown record kind"),
        ("stem|3|3|0|24|nu(n)|Toda\n", "stable from"),
        ("local|3|19@3|0|4||Toda\n", "power of 3"),
        ("kp2|3|22|0|4|inc(kappa(8)):4|Toda\n", "Cayley plane"),
    ])
    def test_malformed_records(self, line, fragment):
        with pytest.raises(ParseError) as excinfo:
            _catalog(line)
        assert excinfo.value.line == 2
        assert fragment in str(excinfo.value)

    def test_duplicate_record(self):
        with pytest.raises(DuplicateKeyError) as excinfo:
            _catalog(PI6_S3, PI6_S3)
        assert excinfo.value.line == 3
        assert excinfo.value.space == sphere(3)

    def test_split_top_respects_parentheses_and_quotes(self):
        assert split_top('a|cmp(x,y)|alias("p|q",z)', "|") == ["a", "cmp(x,y)", 'alias("p|q",z)']

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(CatalogError):
            load_catalog(tmp_path / "missing.txt")

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "catalog.txt"
        path.write_text(HEADER + PI6_S3, encoding="utf-8")
        cat = load_catalog(path)
        assert cat.source == path
        assert cat.get(sphere(3), 6) is not None


class TestSphereLookups:
    def test_below_and_at_the_dimension(self, catalog):
        assert pi_sphere(catalog, 5, 3).group.is_trivial
        top = pi_sphere(catalog, 5, 5)
        assert top.group == FgAbGroup(1)
        assert str(top.generators[0]) == "iota(5)"

    def test_circle(self, catalog):
        assert pi_sphere(catalog, 1, 4).group.is_trivial

    def test_two_sphere_via_hopf_fibration(self, catalog):
        pi3 = pi_sphere(catalog, 2, 3)
        assert pi3.group == FgAbGroup(1)
        assert str(pi3.generators[0]) == "eta(2)"
        pi4 = pi_sphere(catalog, 2, 4)
        assert pi4.group == FgAbGroup(0, (2,))
        assert str(pi4.generators[0]) == "cmp(eta(2),eta(3))"

    def test_unstable_entry(self, catalog):
        assert str(pi_sphere(catalog, 4, 7).group) == "Z + Z_12"

    def test_stable_stem(self, catalog):
        entry = pi_sphere(catalog, 7, 10)
        assert entry.group == FgAbGroup(0, (24,))
        assert str(entry.generators[0]) == "nu(7)"
        assert entry.stable
        assert pi_sphere(catalog, 20, 27).group == FgAbGroup(0, (240,))

    def test_not_covered(self, catalog):
        with pytest.raises(NotCoveredError):
            pi_sphere(catalog, 3, 40)

    def test_local_record(self, catalog):
        assert pi_sphere_local(catalog, 3, 19, 3).group == FgAbGroup(0, (3,))

    def test_local_from_full_record(self, catalog):
        local = pi_sphere_local(catalog, 3, 14, 7)
        assert local.group == FgAbGroup(0, (7,))
        assert local.prime == 7
        assert local.label == "π_14(S^3;7)"


class TestOtherTables:
    def test_center_fact(self, catalog):
        fact = center_fact(catalog, 4, 7)
        assert fact.iso_type == FgAbGroup(1, (2,))
        assert center_fact(catalog, 4, 8).spec == Whole()
        assert center_fact(catalog, 4, 11).spec == Zero()
        assert center_fact(catalog, 9, 30) is None

    def test_so_and_spin(self, catalog):
        assert lie_group(catalog, "so", 7, 14).group == FgAbGroup(0, (2, 8, 2520))
        assert lie_group(catalog, "spin", 9, 10).group == FgAbGroup(0, (8,))
        assert lie_group(catalog, "so", 6, 10).secondary_source
        with pytest.raises(NotCoveredError):
            lie_group(catalog, "so", 30, 3)

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
    def test_su_group_factorial(self, m):
        order = 1
        for i in range(2, m + 1):
            order *= i
        assert su_group(m, 2 * m) == FgAbGroup.cyclic(order)

    def test_su_group_edges(self):
        assert su_group(3, 5) == FgAbGroup(1)
        assert su_group(2, 5) == FgAbGroup.cyclic(2)
        assert su_group(3, 7).is_trivial
        with pytest.raises(NotCoveredError):
            su_group(3, 10)

    def test_sp_group(self):
        assert sp_group(1, 3) == FgAbGroup(1)
        assert sp_group(1, 5) == FgAbGroup.cyclic(2)
        assert sp_group(2, 10) == FgAbGroup.cyclic(120)
        with pytest.raises(NotCoveredError):
            sp_group(2, 8)

    def test_lie_group_closed_formulas(self, catalog):
        entry = lie_group(catalog, "su", 4, 8)
        assert entry.space == SpaceId("su", 4)
        assert entry.group == FgAbGroup.cyclic(24)

    def test_kp2_records(self, catalog):
        assert str(catalog.get(KP2, 22).group) == "Z_4"
        extension = catalog.get(KP2, 26, 2)
        assert extension.prime == 2
        assert extension.note.startswith("extension")


class TestExport:
    def test_export_rows(self, catalog):
        rows = export_rows(catalog)
        assert len(rows) == len(catalog)
        assert all(set(row) == {"space", "k", "group", "generators", "citation"} for row in rows)

    def test_export_is_yaml(self, catalog):
        data = yaml.safe_load(export_catalog(catalog))
        assert data["schema"] == 1
        assert data["checksum"] == catalog.checksum
        spaces = {row["space"] for row in data["records"]}
        assert "S^3" in spaces
        assert "KP^2" in spaces
