from __future__ import annotations

import json

import pytest

from drgcayley import catalog
from drgcayley.cayleyness import canonical_form
from drgcayley.drg import check_distance_regular, parse_array, render_array
from drgcayley.graphs import graph_metrics


def test_table_row_counts():
    assert len(catalog.entries(1)) == 13
    assert len(catalog.entries(2)) == 17
    assert len(catalog.entries(3)) == 15
    assert len(catalog.entries(4)) == 15
    assert len(catalog.entries("all")) == 60


def test_table1_has_five_cayley_rows():
    yes = [e for e in catalog.entries(1) if e.cayley == "yes"]
    assert len(yes) == 5


def test_every_entry_has_reference_text():
    for e in catalog.entries("all"):
        assert e.reference, e.name


def test_lookup_aliases():
    assert catalog.find_entry("petersen").n == 10
    assert catalog.find_entry("Petersen ~ O_3") is catalog.find_entry("o3")
    assert catalog.find_entry("K*_{4,4}").n == 8
    assert catalog.find_entry("k*4,4") is catalog.find_entry("cube")
    assert catalog.find_entry("heawood").g == 6
    assert catalog.find_entry("armanios-wells").n == 32
    with pytest.raises(ValueError):
        catalog.find_entry("no such graph")


def test_list_names_buildable():
    names = catalog.list_names()
    assert any("Petersen" in n for n in names)
    # every listed name resolves, to a table entry or an extra build
    extras = {n.lower() for n in catalog.EXTRA_BUILDS}
    for n in names:
        if n.lower() in extras:
            catalog.build(n)
        else:
            catalog.find_entry(n)


def test_build_validates_against_entry():
    for name in ("petersen", "heawood", "pappus", "shrikhande", "icosahedron"):
        e = catalog.find_entry(name)
        g = catalog.build(name)
        assert g.n == e.n
        r = check_distance_regular(g)
        assert render_array(r.array) == e.array
        assert graph_metrics(g, with_table=False).girth == e.g


def test_build_feasibility_row_raises():
    with pytest.raises(ValueError):
        catalog.build("IG(GH(3,3))")


def test_extra_builds():
    tt = catalog.build("truncated-tetrahedron")
    assert tt.n == 12
    t6 = catalog.build("t(6)")
    assert render_array(check_distance_regular(t6).array) == "{8,3;1,4}"
    f4 = catalog.build("folded-4-cube")
    assert render_array(check_distance_regular(f4).array) == "{4,3;1,4}"


def test_assets_load_and_revalidate():
    for stem in catalog.asset_stems():
        g = catalog.load_asset(stem)
        assert g.n > 0


def test_load_asset_explicit_dir_must_exist(tmp_path):
    with pytest.raises(FileNotFoundError):
        catalog.load_asset("foster", data_dir=tmp_path)


def test_load_asset_rejects_corrupt_data(tmp_path):
    # right format, wrong graph: the array re-check must fire
    good = catalog.build("petersen")
    from drgcayley.graphs import to_graph6
    (tmp_path / "foster.g6").write_text(to_graph6(good) + "\n")
    with pytest.raises(ValueError):
        catalog.load_asset("foster", data_dir=tmp_path)


def test_unknown_asset():
    with pytest.raises(ValueError):
        catalog.load_asset("mystery")


def test_entry_source_classification():
    assert catalog.find_entry("foster").source == "asset"
    assert catalog.find_entry("petersen").source == "recipe"
    assert catalog.find_entry("IG(GH(3,3))").source == "none"


def test_named_builders_match_arrays():
    cases = {
        "o4": "{4,3,3;1,1,2}",
        "sylvester": "{5,4,2;1,1,4}",
        "klein": "{7,4,1;1,2,7}",
        "icosahedron": "{5,2,1;1,2,5}",
        "k3,3,3": "{6,2;1,6}",
    }
    for name, arr in cases.items():
        g = catalog.build(name)
        assert render_array(check_distance_regular(g).array) == arr, name


def test_crown_graphs_are_cayley_built():
    for n in (4, 5, 6, 7):
        g = catalog.crown_graph(n)
        assert g.n == 2 * n
        r = check_distance_regular(g)
        assert r.array.k == n - 1
        assert r.array.d == 3


def test_halved_foster():
    g = catalog.halved_foster_graph()
    assert g.n == 45
    assert render_array(check_distance_regular(g).array) == "{6,4,2,1;1,1,4,6}"


def test_census_parameters_only():
    rows = catalog.census(check_cayley=False)
    assert len(rows) == 60
    bad = [r for r in rows if r.status not in ("OK", "feasibility-only")]
    assert bad == []
    assert sum(1 for r in rows if r.status == "feasibility-only") == 4


def test_census_single_table_with_verdicts():
    rows = catalog.census(table=1)
    assert len(rows) == 13
    assert all(r.status == "OK" for r in rows)
    verdicts = {r.name: r.computed_cayley for r in rows}
    assert verdicts["Petersen ~ O_3"].startswith("no")
    assert verdicts["Heawood ~ IG(7,3,1)"].startswith("yes")


def test_census_table_accepts_strings():
    rows = catalog.census(table="2", check_cayley=False)
    assert len(rows) == 17


def test_census_renderers():
    rows = catalog.census(table=1, check_cayley=False)
    tsv = catalog.render_census_tsv(rows)
    assert tsv.splitlines()[0].startswith("name\t")
    md = catalog.render_census_md(rows)
    assert "| Intersection array | n | d | g | Name | Cayley | Reference |" in md
    assert "**Table 1." in md
    blob = catalog.render_census_json(rows)
    assert blob["schema"] == 1
    assert len(blob["rows"]) == 13
    json.dumps(blob)   # must be serializable


def test_census_threads_agree():
    seq = catalog.census(table=1, check_cayley=False)
    par = catalog.census(table=1, check_cayley=False, threads=4)
    assert [(r.name, r.status) for r in seq] == [(r.name, r.status) for r in par]


def test_display_builds_match_witnesses_canonically():
    # rows whose display build differs from the Cayley witness
    e = catalog.find_entry("pappus")
    v = e.variants[0]
    assert v.witness is not None
    assert canonical_form(v.build(None)) == canonical_form(v.witness())


def test_gh22_variants_are_nonisomorphic():
    e = catalog.find_entry("GH(2,2) (2x)")
    assert len(e.variants) == 2
    a = e.variants[0].build(None)
    b = e.variants[1].build(None)
    assert canonical_form(a) != canonical_form(b)
    for g in (a, b):
        assert render_array(check_distance_regular(g).array) == e.array


def test_arrays_in_entries_parse():
    for e in catalog.entries("all"):
        arr = parse_array(e.array)
        assert arr.n == e.n, e.name
        assert arr.d == e.d, e.name
