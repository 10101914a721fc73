import json

import pytest

from pancert.construction import build_graph
from pancert.cycles import short_cycle
from pancert.serialize import (
    SchemaError,
    certificate_line,
    export_bytes,
    from_json,
    to_dot,
    to_json,
)
from pancert.construction import PortedVertex


@pytest.mark.parametrize("k", (1, 2))
def test_json_round_trip(k):
    g = build_graph(k)
    assert from_json(to_json(g)) == g


def test_json_deterministic():
    g = build_graph(1)
    assert to_json(g) == to_json(g)
    assert to_dot(g) == to_dot(g)


def test_json_schema_shape():
    obj = json.loads(to_json(build_graph(1)))
    assert set(obj) == {"k", "vertices", "edges"}
    assert obj["k"] == 1
    assert obj["vertices"][0] == {"label": "000", "port": 0, "layer": 1}
    kinds = {e["kind"] for e in obj["edges"]}
    assert kinds == {"internal", "external"}
    for e in obj["edges"]:
        assert (e["color"] is None) == (e["kind"] == "internal")


def test_dot_counts_and_styles():
    g = build_graph(1)
    dot = to_dot(g)
    lines = dot.splitlines()
    assert sum(1 for l in lines if "[label=" in l and l.strip().startswith("v")) == 24
    edge_lines = [l for l in lines if " -- " in l]
    assert len(edge_lines) == 52
    assert sum(1 for l in edge_lines if "style=dashed" in l) == 24
    for color in ("crimson", "royalblue", "forestgreen"):
        assert any(color in l for l in edge_lines)


def test_export_bytes_formats():
    g = build_graph(1)
    assert export_bytes(g, "json") == to_json(g).encode()
    assert export_bytes(g, "dot") == to_dot(g).encode()
    with pytest.raises(ValueError, match="unknown format"):
        export_bytes(g, "xml")


def test_certificate_line_is_canonical():
    cert = short_cycle(PortedVertex(0, 0, 1), 3)
    line = certificate_line(cert)
    assert "\n" not in line
    obj = json.loads(line)
    assert obj["m"] == 3
    assert obj["target"] == {"label": "000", "layer": 1, "port": 0}
    assert [v["port"] for v in obj["cycle"]] == [0, 1, 2]
    # canonical rendering: sorted keys, no whitespace
    assert line == json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _base_obj():
    return json.loads(to_json(build_graph(1)))


def _expect_schema_error(obj, match):
    with pytest.raises(SchemaError, match=match):
        from_json(json.dumps(obj))


def test_schema_rejects_malformed_json():
    with pytest.raises(SchemaError, match="line 1"):
        from_json("{not json")


def test_schema_requires_top_level_keys():
    obj = _base_obj()
    del obj["k"]
    _expect_schema_error(obj, "missing key 'k'")
    obj = _base_obj()
    obj["extra"] = 1
    _expect_schema_error(obj, "unknown key 'extra'")
    with pytest.raises(SchemaError, match="top level"):
        from_json("[]")


def test_schema_validates_k():
    obj = _base_obj()
    obj["k"] = 0
    _expect_schema_error(obj, "k: expected a positive integer")


def test_schema_validates_vertices():
    obj = _base_obj()
    obj["vertices"][3]["label"] = "21x"
    _expect_schema_error(obj, r"vertices\[3\].label")

    obj = _base_obj()
    obj["vertices"][5]["port"] = 4
    _expect_schema_error(obj, r"vertices\[5\].port")

    obj = _base_obj()
    obj["vertices"][2]["layer"] = 2  # k is 1 here
    _expect_schema_error(obj, r"vertices\[2\].layer")

    obj = _base_obj()
    obj["vertices"][1] = dict(obj["vertices"][0])
    _expect_schema_error(obj, r"vertices\[1\]: duplicate")

    obj = _base_obj()
    del obj["vertices"][0]["port"]
    _expect_schema_error(obj, r"vertices\[0\]: missing key 'port'")


def test_schema_validates_edges():
    obj = _base_obj()
    obj["edges"][3]["u"] = 99
    _expect_schema_error(obj, r"edges\[3\].u: unknown vertex index 99")

    obj = _base_obj()
    obj["edges"][0]["v"] = obj["edges"][0]["u"]
    _expect_schema_error(obj, r"edges\[0\]: loop")

    obj = _base_obj()
    obj["edges"].append(dict(obj["edges"][0]))
    _expect_schema_error(obj, "duplicate of edges")

    # a reversed copy is the same undirected edge
    obj = _base_obj()
    first = dict(obj["edges"][0])
    first["u"], first["v"] = first["v"], first["u"]
    obj["edges"].append(first)
    _expect_schema_error(obj, "duplicate of edges")

    obj = _base_obj()
    obj["edges"][1]["kind"] = "sideways"
    _expect_schema_error(obj, r"edges\[1\].kind")

    obj = _base_obj()
    internal = next(i for i, e in enumerate(obj["edges"]) if e["kind"] == "internal")
    obj["edges"][internal]["color"] = 1
    _expect_schema_error(obj, "internal edges carry null")

    obj = _base_obj()
    external = next(i for i, e in enumerate(obj["edges"]) if e["kind"] == "external")
    obj["edges"][external]["color"] = None
    _expect_schema_error(obj, "expected 0, 1 or 2")


def test_import_normalizes_endpoint_order():
    obj = _base_obj()
    e = obj["edges"][0]
    e["u"], e["v"] = e["v"], e["u"]
    assert from_json(json.dumps(obj)) == build_graph(1)


def test_import_keeps_nominal_name():
    g = from_json(to_json(build_graph(1)), name="imported:x.json")
    assert g.name == "imported:x.json"
    assert g == build_graph(1)  # name does not take part in equality
