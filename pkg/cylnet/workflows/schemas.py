__all__ = [
    'schema_conjecture', 'schema_family', 'schema_minimal', 'schema_network',
    'schema_oracle', 'schema_paths', 'schema_plee', 'schema_pleh', 'schema_qpoly',
    'schema_verify', 'schema_workflows']


from schema import (And, Optional, Or, Schema, Use)


def merge(d1, d2):
    """Union of two dictionaries, `d2` taking precedence"""
    x = d1.copy()
    x.update(d2)
    return x


def positive(n: int) -> bool:
    return n >= 1


def nonnegative(n: int) -> bool:
    return n >= 0


def int_list(xs) -> list:
    """Accept ``[1, 0]`` or the command line form ``"1,0"``"""
    if isinstance(xs, str):
        return [int(x) for x in xs.split(',') if x.strip()]
    return [int(x) for x in xs]


def workflow_name(name: str):
    return And(str, Use(str.lower), lambda s: s == name)


schema_edge = Schema({
    # Quotient vertices joined by the edge
    "from": str,
    "to": str,

    # Number of fundamental domains crossed by the lifted edge
    Optional("offset", default=0): And(int, lambda o: not isinstance(o, bool)),

    # Polynomial weight, e.g. "c*d + 2"
    Optional("weight", default="1"): Or(str, int)
})

schema_network = Schema({
    # Label used in logs and reports
    Optional("name"): str,

    # Declaration order fixes the matrix indices
    "vertices": And([str], len),

    # Variables allowed in the weights; inferred when missing
    Optional("vars"): [str],

    # Whether the network is drawn on the cylinder without crossings
    Optional("planar", default=False): bool,

    "edges": [schema_edge]
})

dict_general_options = {
    # Print the results as JSON
    Optional("json", default=False): bool,

    # File where the log is written
    Optional("log_file", default=None): Or(str, None),

    # Worker threads, CYLNET_THREADS when missing
    Optional("threads", default=None): Or(None, And(int, nonnegative))
}

dict_network = {
    # Path to the network in JSON format, "-" for the standard input
    "network": str
}

dict_endpoints = {
    # r-vertices written as "u@0,v@-1"
    "sources": str,
    "sinks": str,

    # First translation index
    Optional("start", default=0): int
}

schema_qpoly = Schema(merge(dict_general_options, merge(dict_network, {
    "workflow": workflow_name("qpoly")})))

schema_plee = Schema(merge(dict_general_options, merge(dict_network, {
    "workflow": workflow_name("plee"),
    "r": And(int, positive)})))

schema_pleh = Schema(merge(dict_general_options, merge(dict_network, {
    "workflow": workflow_name("pleh"),
    "r": And(int, positive)})))

schema_paths = Schema(merge(dict_general_options, merge(dict_network, merge(
    dict_endpoints, {
        "workflow": workflow_name("paths"),

        # Number of terms of the sequence
        Optional("length", default=8): And(int, positive)}))))

schema_verify = Schema(merge(dict_general_options, merge(dict_network, merge(
    dict_endpoints, {
        "workflow": workflow_name("verify"),
        Optional("length", default=8): And(int, positive),

        # Recurrence tested: Q_N, Q^(r) or Q^<r> with r the number of sources
        Optional("recurrence", default="plee"): And(
            str, Use(str.lower), lambda s: s in ("q", "plee", "pleh")),

        # Explicit polynomial in t replacing the computed recurrence
        Optional("poly", default=None): Or(str, None),

        # Largest number of leading exceptions, the degree by default
        Optional("max_prefix", default=None): Or(None, And(int, nonnegative)),

        # Check at a random integer point instead of symbolically
        Optional("numeric", default=False): bool,
        Optional("seed", default=0): int}))))

schema_minimal = Schema(merge(dict_general_options, merge(dict_network, merge(
    dict_endpoints, {
        "workflow": workflow_name("minimal"),
        Optional("length", default=16): And(int, positive),

        # Number of random substitution points
        Optional("points", default=3): And(int, positive),
        Optional("seed", default=0): int,

        # Leading terms ignored by the estimate
        Optional("drop", default=0): And(int, nonnegative)}))))

schema_family = Schema(merge(dict_general_options, {
    "workflow": workflow_name("family"),
    "kind": And(str, Use(str.lower), lambda s: s in ("schur", "lozenge", "domino")),
    Optional("n", default=1): And(int, positive),
    Optional("m", default=1): And(int, positive),

    # Domino lattice point weights, a YAML mapping "p,q": monomial
    Optional("weights", default=None): Or(None, str)}))

schema_oracle = Schema(merge(dict_general_options, {
    "workflow": workflow_name("oracle"),
    # "rpp" names the reverse plane partitions of the lozenge network
    "kind": And(str, Use(str.lower), Use(lambda s: "lozenge" if s == "rpp" else s),
                lambda s: s in ("schur", "lozenge", "domino")),

    # Schur: partition and grid size
    Optional("lam", default=[1]): Use(int_list),
    Optional("n", default=1): And(int, positive),
    Optional("m", default=1): And(int, positive),

    # Lozenge: shape parameters with a + b = c + d and the entry bound r
    Optional("a", default=1): And(int, nonnegative),
    Optional("b", default=1): And(int, nonnegative),
    Optional("c", default=1): And(int, nonnegative),
    Optional("d", default=1): And(int, nonnegative),
    Optional("r", default=1): And(int, positive),

    # Domino: centre and radius offset of the regions
    Optional("i", default=0): int,
    Optional("j", default=1): And(int, nonnegative),
    Optional("l0", default=1): And(int, nonnegative),
    Optional("boundary", default="normalized"): And(
        str, Use(str.lower), lambda s: s in ("omit", "normalized")),

    Optional("start", default=None): Or(None, int),
    Optional("length", default=4): And(int, positive)}))

schema_conjecture = Schema(merge(dict_general_options, merge(dict_network, {
    "workflow": workflow_name("conjecture"),
    "kind": And(str, Use(str.lower), lambda s: s in (
        "polya", "roots", "tp", "minimal", "plee_general")),
    Optional("trials", default=5): And(int, positive),
    Optional("seed", default=0): int,
    Optional("max_minor", default=3): And(int, positive),
    Optional("r", default=1): And(int, positive),

    # Skip the strong connectivity requirement of the minimality check
    Optional("allow_disconnected", default=False): bool})))

schema_workflows = {
    'qpoly': schema_qpoly,
    'plee': schema_plee,
    'pleh': schema_pleh,
    'paths': schema_paths,
    'verify': schema_verify,
    'minimal': schema_minimal,
    'family': schema_family,
    'oracle': schema_oracle,
    'conjecture': schema_conjecture
}
