"""Line-oriented IF/THEN rule format and the six built-in decision rule bases.

Grammar (keywords case-insensitive, ``#`` starts a comment, blank lines are
skipped)::

    rule   := "IF" clause ("AND" clause)* "THEN" clause
    clause := NAME "IS" LABEL

Names and labels match the bound variables case-insensitively, with spaces,
hyphens, and underscores interchangeable. Antecedents are pure conjunctions;
disjunction is not supported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .engine import Rule
from .membership import LinguisticVariable, normalize_label

__all__ = [
    "DecisionId",
    "RuleBase",
    "RuleParseError",
    "parse_rules",
    "serialize_rules",
    "builtin_rulebase",
]


class DecisionId(Enum):
    """The six decision outputs a secondary user reasons about."""

    CHANNEL_SELECTION = "channel-selection"
    HANDOFF_STATUS = "handoff-status"
    CHANNEL_GAIN = "channel-gain"
    ACCESS_SPECTRUM = "access-spectrum"
    ACCESS_LATENCY = "access-latency"
    BANDWIDTH_ALLOCATION = "bandwidth-allocation"

    @staticmethod
    def parse(text: str) -> "DecisionId":
        key = normalize_label(text)
        for member in DecisionId:
            if normalize_label(member.value) == key:
                return member
        valid = ", ".join(m.value for m in DecisionId)
        raise ValueError(f"unknown decision {text!r}; valid: {valid}")


class RuleParseError(ValueError):
    """Parse failure, carrying the offending line number where known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class RuleBase:
    """Ordered list of rules plus the variable order used for serialization."""

    rules: tuple[Rule, ...]
    variable_order: tuple[str, ...] = field(compare=False, default=())
    source: str = field(compare=False, default="")

    def __len__(self) -> int:
        return len(self.rules)

    def antecedent_maps(self) -> list[dict[str, str]]:
        return [rule.antecedent_map() for rule in self.rules]


_KEYWORDS = {"if", "and", "then", "is"}


def _split_clauses(tokens: list[str], line_no: int) -> tuple[list[list[str]], list[str]]:
    """Split token stream into antecedent clauses and the consequent clause."""
    if not tokens or tokens[0].lower() != "if":
        raise RuleParseError("rule must start with IF", line_no)
    try:
        then_at = [t.lower() for t in tokens].index("then")
    except ValueError:
        raise RuleParseError("rule is missing THEN", line_no) from None
    antecedent_tokens = tokens[1:then_at]
    consequent_tokens = tokens[then_at + 1 :]
    clauses: list[list[str]] = [[]]
    for token in antecedent_tokens:
        if token.lower() == "and":
            clauses.append([])
        else:
            clauses[-1].append(token)
    if any(not clause for clause in clauses):
        raise RuleParseError("empty clause around AND", line_no)
    if not consequent_tokens:
        raise RuleParseError("empty consequent after THEN", line_no)
    return clauses, consequent_tokens


def _parse_clause(tokens: list[str], line_no: int) -> tuple[str, str]:
    """A clause is NAME IS LABEL; multi-word names and labels are allowed."""
    lowered = [t.lower() for t in tokens]
    if lowered.count("is") != 1:
        raise RuleParseError(
            f"clause needs exactly one IS: {' '.join(tokens)!r}", line_no
        )
    at = lowered.index("is")
    name = " ".join(tokens[:at])
    label = " ".join(tokens[at + 1 :])
    if not name or not label:
        raise RuleParseError(f"incomplete clause: {' '.join(tokens)!r}", line_no)
    return name, label


def parse_rules(
    text: str,
    inputs: Sequence[LinguisticVariable],
    output: LinguisticVariable,
) -> RuleBase:
    """Parse rule text against bound variables into a rule base.

    Duplicate antecedent sets are rejected outright (consistent or not), so
    transcription slips surface instead of silently overriding each other.
    """
    inputs_by_key = {normalize_label(v.name): v for v in inputs}
    output_key = normalize_label(output.name)
    rules: list[Rule] = []
    seen: dict[tuple[tuple[str, str], ...], int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        clauses, consequent_tokens = _split_clauses(line.split(), line_no)
        antecedents: dict[str, str] = {}
        for clause in clauses:
            name, label = _parse_clause(clause, line_no)
            var = inputs_by_key.get(normalize_label(name))
            if var is None:
                known = ", ".join(v.name for v in inputs)
                raise RuleParseError(
                    f"unknown input variable {name!r}; bound inputs: {known}", line_no
                )
            try:
                term = var.term(label)
            except KeyError:
                raise RuleParseError(
                    f"variable {var.name!r} has no label {label!r}; "
                    f"valid labels: {', '.join(var.labels)}",
                    line_no,
                ) from None
            if var.name in antecedents:
                raise RuleParseError(
                    f"variable {var.name!r} appears twice in one rule", line_no
                )
            antecedents[var.name] = term.label
        out_name, out_label = _parse_clause(consequent_tokens, line_no)
        if normalize_label(out_name) != output_key:
            raise RuleParseError(
                f"consequent must assign the output variable {output.name!r}, "
                f"got {out_name!r}",
                line_no,
            )
        try:
            out_term = output.term(out_label)
        except KeyError:
            raise RuleParseError(
                f"variable {output.name!r} has no label {out_label!r}; "
                f"valid labels: {', '.join(output.labels)}",
                line_no,
            ) from None
        key = tuple(sorted(antecedents.items()))
        if key in seen:
            raise RuleParseError(
                f"duplicate antecedent set (first seen on line {seen[key]})", line_no
            )
        seen[key] = line_no
        rules.append(Rule.of(antecedents, out_term.label))
    order = tuple(v.name for v in inputs) + (output.name,)
    return RuleBase(tuple(rules), variable_order=order, source="parsed")


def serialize_rules(rulebase: RuleBase) -> str:
    """Canonical text form: one rule per line, antecedents in variable order."""
    if not rulebase.variable_order:
        raise ValueError("rule base has no variable order to serialize against")
    position = {name: i for i, name in enumerate(rulebase.variable_order)}
    lines = []
    for rule in rulebase.rules:
        ordered = sorted(rule.antecedents, key=lambda pair: position[pair[0]])
        clauses = " AND ".join(f"{name} IS {label}" for name, label in ordered)
        output_name = rulebase.variable_order[-1]
        lines.append(f"IF {clauses} THEN {output_name} IS {rule.consequent}")
    return "\n".join(lines)


# --- built-in rule bases ----------------------------------------------------
#
# Label shorthand used by the tables below.
_L5 = {"VH": "VeryHigh", "H": "High", "M": "Moderate", "L": "Low", "VL": "VeryLow"}
_L3 = {"S": "Small", "M": "Medium", "L": "Large"}
_ONOFF = {"+": "On", "-": "Off"}
_PRESENCE = {"P": "Present", "A": "Absent"}

_FIVE = ("VH", "H", "M", "L", "VL")
_THREE = ("S", "M", "L")

# Channel selection from (signal strength, spectrum demand, snr). Each cell
# lists the consequents for snr = VH, H, M, L, VL. The published table repeats
# one (Low, VeryLow, VeryLow) row verbatim; the duplicate is dropped, leaving
# the full 5x5x5 base.
_CHANNEL_SELECTION = {
    "VH": {
        "VH": "M  L  VL VL VL",
        "H":  "H  M  L  VL VL",
        "M":  "VH H  M  L  VL",
        "L":  "VH VH H  M  L",
        "VL": "VH VH VH H  M",
    },
    "H": {
        "VH": "M  L  VL VL VL",
        "H":  "H  M  L  VL VL",
        "M":  "VH H  M  L  VL",
        "L":  "VH VH H  M  L",
        "VL": "VH VH VH H  M",
    },
    "M": {
        "VH": "M  L  L  VL VL",
        "H":  "H  M  L  L  VL",
        "M":  "VH H  M  L  VL",
        "L":  "VH VH H  M  L",
        "VL": "VH VH VH H  M",
    },
    "L": {
        "VH": "M  L  L  VL VL",
        "H":  "H  M  L  VL VL",
        "M":  "L  L  VL L  VL",
        "L":  "VH VH M  L  L",
        "VL": "VH VH H  M  M",
    },
    "VL": {
        "VH": "M  L  L  VL VL",
        "H":  "H  M  L  VL VL",
        "M":  "L  L  VL VL VL",
        "L":  "VH VH M  L  VL",
        "VL": "VH VH H  M  VL",
    },
}

# Handoff status from (snr, interference); consequents for interference =
# VH, H, M, L, VL.
_HANDOFF = {
    "VH": "- - + + +",
    "H":  "- - + + +",
    "M":  "- - + + -",
    "L":  "- - - - -",
    "VL": "- - - - -",
}

# Channel gain from (channel quality, susceptibility); consequents for
# susceptibility = VH, H, M, L, VL.
_CHANNEL_GAIN = {
    "VH": "L  L  H  VH VH",
    "H":  "L  L  M  H  VH",
    "M":  "L  L  M  M  H",
    "L":  "L  L  L  L  L",
    "VL": "L  L  L  L  L",
}

# Spectrum access from (utilisation efficiency, mobility, distance);
# consequents for distance = S, M, L.
_ACCESS_SPECTRUM = {
    "S": {"S": "VL L  L", "M": "VL L  M", "L": "L  L  M"},
    "M": {"S": "VL M  H", "M": "VL M  H", "L": "VL L  H"},
    "L": {"S": "L  H  VH", "M": "L  H  VH", "L": "VL H  H"},
}

# Access latency from (secondary-user traffic, allocation-queue traffic);
# consequents for queue traffic = Absent, Present.
_ACCESS_LATENCY = {
    "VL": "VL L",
    "L":  "L  M",
    "M":  "M  H",
    "H":  "H  VH",
    "VH": "VH VH",
}

# Bandwidth allocation from (access latency, traffic priority); consequents
# for priority = Absent, Present.
_BANDWIDTH_ALLOCATION = {
    "VL": "VH VH",
    "L":  "M  H",
    "M":  "L  M",
    "H":  "L  L",
    "VH": "VL VL",
}


def _rules_from_grid3(
    table: dict, axes: tuple[str, str, str], codes1, codes2, codes3, labels
) -> list[Rule]:
    rules = []
    for c1 in codes1:
        for c2 in codes2:
            row = table[c1][c2].split()
            for c3, out in zip(codes3, row):
                rules.append(
                    Rule.of(
                        {
                            axes[0]: labels[c1],
                            axes[1]: labels[c2],
                            axes[2]: labels[c3],
                        },
                        _L5[out],
                    )
                )
    return rules


def _rules_from_grid2(
    table: dict, axes: tuple[str, str], codes1, codes2, in_labels, col_labels, out_labels
) -> list[Rule]:
    rules = []
    for c1 in codes1:
        row = table[c1].split()
        for c2, out in zip(codes2, row):
            rules.append(
                Rule.of(
                    {axes[0]: in_labels[c1], axes[1]: col_labels[c2]},
                    out_labels[out],
                )
            )
    return rules


def builtin_rulebase(decision: DecisionId) -> RuleBase:
    """The shipped rule base for one decision, bound to catalog variable names."""
    if decision is DecisionId.CHANNEL_SELECTION:
        rules = _rules_from_grid3(
            _CHANNEL_SELECTION,
            ("signal_strength", "spectrum_demand", "snr"),
            _FIVE, _FIVE, _FIVE,
            _L5,
        )
        order = ("signal_strength", "spectrum_demand", "snr", "channel_selection")
    elif decision is DecisionId.HANDOFF_STATUS:
        rules = _rules_from_grid2(
            _HANDOFF,
            ("snr", "interference"),
            _FIVE, _FIVE,
            _L5, _L5, _ONOFF,
        )
        order = ("snr", "interference", "handoff_status")
    elif decision is DecisionId.CHANNEL_GAIN:
        rules = _rules_from_grid2(
            _CHANNEL_GAIN,
            ("channel_quality", "susceptibility"),
            _FIVE, _FIVE,
            _L5, _L5, _L5,
        )
        order = ("channel_quality", "susceptibility", "channel_gain")
    elif decision is DecisionId.ACCESS_SPECTRUM:
        rules = _rules_from_grid3(
            _ACCESS_SPECTRUM,
            (
                "spectrum_utilisation_efficiency",
                "degree_of_mobility",
                "distance_to_primary_user",
            ),
            _THREE, _THREE, _THREE,
            _L3,
        )
        order = (
            "spectrum_utilisation_efficiency",
            "degree_of_mobility",
            "distance_to_primary_user",
            "access_spectrum",
        )
    elif decision is DecisionId.ACCESS_LATENCY:
        rules = _rules_from_grid2(
            _ACCESS_LATENCY,
            ("su_traffic_intensity", "ba_traffic_intensity"),
            _FIVE, ("A", "P"),
            _L5, _PRESENCE, _L5,
        )
        order = ("su_traffic_intensity", "ba_traffic_intensity", "access_latency")
    else:
        rules = _rules_from_grid2(
            _BANDWIDTH_ALLOCATION,
            ("access_latency", "traffic_priority"),
            _FIVE, ("A", "P"),
            _L5, _PRESENCE, _L5,
        )
        order = ("access_latency", "traffic_priority", "bandwidth_allocation")
    return RuleBase(tuple(rules), variable_order=order, source=f"builtin:{decision.value}")
