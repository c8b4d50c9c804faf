from __future__ import annotations

import json
from typing import Any, Dict

from jinja2 import Environment, StrictUndefined

from core.schema.report import PipelineReport

SUMMARY_TEMPLATE = """Checks for {{ source or "decomposition" }} (seed {{ seed }}): {{ "PASS" if passed else "FAIL" }}
{% for step in steps %}
{{ "%-24s"|format(step.check) }} {{ step.status|upper }}{% if step.status == "skipped" %} ({{ step.certificate.reason }}){% endif %}
{%- for key in step.certificate|sort if key in highlights %}
    {{ key }}: {{ step.certificate[key]|compact }}
{%- endfor %}
{%- for note in step.notes %}
    note: {{ note }}
{%- endfor %}
{% endfor %}
"""

# certificate keys worth a line in the text summary
HIGHLIGHTS = (
    "det_squared",
    "duplicates",
    "invariant_factors",
    "pair",
    "components",
    "violations",
    "verdict",
    "status",
    "reason",
)


def _compact(value: Any) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def build_environment() -> Environment:
    env = Environment(undefined=StrictUndefined, autoescape=False, trim_blocks=True)
    env.filters["compact"] = _compact
    return env


def render_summary(report: PipelineReport) -> str:
    env = build_environment()
    template = env.from_string(SUMMARY_TEMPLATE)
    context: Dict[str, Any] = {
        "source": report.source,
        "seed": report.seed,
        "passed": report.passed,
        "steps": [step.to_json_dict() for step in report.steps],
        "highlights": HIGHLIGHTS,
    }
    return template.render(**context)
