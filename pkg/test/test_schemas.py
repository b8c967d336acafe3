from cylnet.workflows.schemas import (schema_network, schema_oracle, schema_verify)
from cylnet.workflows.input_validation import validate_input
from schema import SchemaError
import pytest


def test_defaults():
    """
    Missing options take the schema defaults
    """
    d = validate_input({"network": "fig1.json", "sources": "u@0", "sinks": "v@0"},
                       "verify")
    assert d.length == 8 and d.start == 0
    assert d.recurrence == "plee" and d.poly is None and not d.numeric
    assert d.json is False and d.threads is None


def test_oracle_partition():
    """
    Partitions are accepted as lists or as comma separated strings
    """
    d = schema_oracle.validate({"workflow": "oracle", "kind": "Schur", "lam": "2,1"})
    assert d["lam"] == [2, 1] and d["kind"] == "schur"
    assert d["boundary"] == "normalized"


def test_oracle_rpp_kind():
    """
    ``rpp`` is another name of the lozenge oracle
    """
    d = schema_oracle.validate({"workflow": "oracle", "kind": "RPP"})
    assert d["kind"] == "lozenge"


def test_invalid_values():
    """
    Unknown keys and values out of range
    """
    with pytest.raises(SchemaError):
        validate_input({"network": "x.json", "r": 0}, "plee")
    with pytest.raises(SchemaError):
        validate_input({"network": "x.json", "r": 1, "colour": "red"}, "plee")
    with pytest.raises(SchemaError):
        schema_verify.validate({"workflow": "verify", "network": "x", "sources": "u",
                                "sinks": "v", "recurrence": "fibonacci"})
    with pytest.raises(SchemaError):
        validate_input({}, "spectrum")


def test_network_schema():
    """
    Edge defaults and booleans rejected as offsets
    """
    d = schema_network.validate({"vertices": ["u"], "edges": [{"from": "u", "to": "u"}]})
    assert d["edges"][0]["offset"] == 0 and d["edges"][0]["weight"] == "1"
    assert d["planar"] is False
    with pytest.raises(SchemaError):
        schema_network.validate({"vertices": ["u"], "edges": [
            {"from": "u", "to": "u", "offset": True}]})
    with pytest.raises(SchemaError):
        schema_network.validate({"vertices": [], "edges": []})
