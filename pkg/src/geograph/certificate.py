"""Canonical JSON form of a :class:`~geograph.planner.Plan`.

Every integer is written as a decimal string so that consumers with 64-bit
integers cannot silently overflow on large counts.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .admissibility import ChernQuintuple, ParamVector, params_to_chern
from .errors import GeographError, MalformedPlan
from .planner import BetaConfig, Counts, Plan

FORMAT_VERSION = "1"

_PARAMS = ("a", "m", "j", "k", "b")
_CHERN = ("c4", "c1c3", "c2sq", "c1sq_c2", "c1_4")
_COUNTS = ("x", "y", "z", "u", "v")
_BETA = ("beta_sq", "c1N_beta", "c1E_beta")


def _ints(obj, names) -> dict[str, str]:
    return {nm: str(getattr(obj, nm)) for nm in names}


def plan_to_dict(plan: Plan) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "branch": plan.branch,
        "n": str(plan.n),
        "lambda": str(plan.lam),
        "K": str(plan.K),
        "beta_config": _ints(plan.beta_config, _BETA),
        "counts": _ints(plan.counts, _COUNTS),
        "base": _ints(plan.base, _PARAMS),
        "target": _ints(plan.target, _PARAMS),
        "target_chern": _ints(params_to_chern(plan.target), _CHERN),
        "geometric_disclaimer": plan.geometric_disclaimer,
        "errata_applied": list(plan.errata_applied),
    }


def dumps(plan: Plan) -> str:
    return json.dumps(plan_to_dict(plan), indent=2, sort_keys=True) + "\n"


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise MalformedPlan(f"{where}: expected a decimal integer string, got {value!r}")
    try:
        return int(value)
    except ValueError:
        raise MalformedPlan(f"{where}: {value!r} is not an integer") from None


def _group(d: dict, key: str, names) -> dict[str, int]:
    sub = d.get(key)
    if not isinstance(sub, dict):
        raise MalformedPlan(f"missing object {key!r}")
    missing = [nm for nm in names if nm not in sub]
    if missing:
        raise MalformedPlan(f"{key}: missing fields {missing}")
    return {nm: _int(sub[nm], f"{key}.{nm}") for nm in names}


def plan_from_dict(d: dict) -> Plan:
    if not isinstance(d, dict):
        raise MalformedPlan("certificate must be a JSON object")
    if d.get("format_version") != FORMAT_VERSION:
        raise MalformedPlan(f"unsupported format_version {d.get('format_version')!r}")
    for key in ("branch", "n", "lambda", "K", "geometric_disclaimer"):
        if key not in d:
            raise MalformedPlan(f"missing field {key!r}")
    try:
        target = ParamVector(**_group(d, "target", _PARAMS))
        plan = Plan(
            branch=str(d["branch"]),
            n=_int(d["n"], "n"),
            lam=_int(d["lambda"], "lambda"),
            K=_int(d["K"], "K"),
            beta_config=BetaConfig(**_group(d, "beta_config", _BETA)),
            counts=Counts(**_group(d, "counts", _COUNTS)),
            base=ParamVector(**_group(d, "base", _PARAMS)),
            target=target,
            geometric_disclaimer=bool(d["geometric_disclaimer"]),
            errata_applied=tuple(d.get("errata_applied", ())),
        )
        if "target_chern" in d:
            chern = ChernQuintuple(**_group(d, "target_chern", _CHERN))
            if chern != params_to_chern(target):
                raise MalformedPlan("target_chern does not match target parameters")
    except MalformedPlan:
        raise
    except (ValueError, GeographError) as exc:
        raise MalformedPlan(str(exc)) from exc
    return plan


def loads(text: str) -> Plan:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedPlan(f"not valid JSON: {exc}") from exc
    return plan_from_dict(d)


def save(plan: Plan, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(plan))


def load(path: Union[str, Path]) -> Plan:
    return loads(Path(path).read_text())
