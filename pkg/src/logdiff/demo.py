"""Deterministic synthetic hospital log used for demos and tests.

Cases are split over two regimes on the timestamp axis ("first" /
"second" era) with one treatment activity exclusive to each era, so
slicing the log at the era boundary always yields a non-empty
unique-activity diff. No case crosses the boundary: starts are confined
to the first 150 days of each era and a case never runs longer than ~20
days. Same (seed, case_count) always produces the identical log.
"""
from __future__ import annotations

import random
from datetime import datetime, timedelta, timezone

from .errors import ValidationError
from .model import Event, EventLog, Scalar, make_log, make_trace

ERA_ONE_START = datetime(2020, 3, 1, tzinfo=timezone.utc)
ERA_BOUNDARY = datetime(2020, 9, 1, tzinfo=timezone.utc)
ERA_TWO_END = datetime(2021, 3, 1, tzinfo=timezone.utc)

ERA_ONE_ONLY_ACTIVITY = "Plasma Therapy"
ERA_TWO_ONLY_ACTIVITY = "Antiviral Treatment"

_START_SPREAD_DAYS = 150

_DEPARTMENTS = {
    "ER Registration": "ER",
    "Triage": "ER",
    "COVID Test": "LAB",
    "Ward Admission": "WARD",
    ERA_ONE_ONLY_ACTIVITY: "WARD",
    ERA_TWO_ONLY_ACTIVITY: "WARD",
    "ICU Transfer": "ICU",
    "Ventilation": "ICU",
    "Discharge": "WARD",
    "Deceased": "WARD",
}

_AGE_GROUPS = ("0-39", "40-64", "65+")


def _event(rng: random.Random, activity: str, at: datetime) -> Event:
    attrs: dict[str, Scalar] = {
        "org:resource": f"staff-{rng.randint(1, 40):02d}",
        "department": _DEPARTMENTS[activity],
    }
    return Event(activity=activity, timestamp=at, attributes=attrs)


def _advance(rng: random.Random, at: datetime, low_s: float, high_s: float) -> datetime:
    return at + timedelta(seconds=int(rng.uniform(low_s, high_s)) + 1)


def generate_demo_log(seed: int, case_count: int) -> EventLog:
    """Pseudo-random two-era hospital log with `case_count` cases."""
    if case_count < 1:
        raise ValidationError(f"case_count must be >= 1, got {case_count}")
    rng = random.Random(seed)
    first_era_cases = (case_count + 1) // 2
    id_width = max(4, len(str(case_count)))

    traces = []
    for index in range(case_count):
        in_first_era = index < first_era_cases
        era_start = ERA_ONE_START if in_first_era else ERA_BOUNDARY
        treatment = ERA_ONE_ONLY_ACTIVITY if in_first_era else ERA_TWO_ONLY_ACTIVITY
        # the first case of each era always receives the era-exclusive treatment,
        # guaranteeing a unique activity per half under any era-boundary split
        forced = index == 0 or index == first_era_cases

        at = era_start + timedelta(seconds=int(rng.uniform(0, _START_SPREAD_DAYS * 86400)))
        events = [_event(rng, "ER Registration", at)]
        at = _advance(rng, at, 5 * 60, 45 * 60)
        events.append(_event(rng, "Triage", at))
        at = _advance(rng, at, 20 * 60, 4 * 3600)
        events.append(_event(rng, "COVID Test", at))

        admitted = forced or rng.random() < 0.75
        icu = False
        if admitted:
            at = _advance(rng, at, 2 * 3600, 12 * 3600)
            events.append(_event(rng, "Ward Admission", at))
            if forced or rng.random() < 0.45:
                at = _advance(rng, at, 12 * 3600, 3 * 86400)
                events.append(_event(rng, treatment, at))
            icu = rng.random() < (0.35 if in_first_era else 0.22)
            if icu:
                at = _advance(rng, at, 6 * 3600, 2 * 86400)
                events.append(_event(rng, "ICU Transfer", at))
                if rng.random() < 0.5:
                    at = _advance(rng, at, 1 * 3600, 12 * 3600)
                    events.append(_event(rng, "Ventilation", at))
            deceased = rng.random() < (0.25 if icu else 0.06)
            at = _advance(rng, at, 2 * 86400, 12 * 86400)
            events.append(_event(rng, "Deceased" if deceased else "Discharge", at))
        else:
            at = _advance(rng, at, 1 * 3600, 8 * 3600)
            events.append(_event(rng, "Discharge", at))

        case_id = f"case-{index + 1:0{id_width}d}"
        attributes: dict[str, Scalar] = {
            "ward": "ICU" if icu else "GENERAL",
            "age_group": rng.choice(_AGE_GROUPS),
            "era": "first" if in_first_era else "second",
        }
        traces.append(make_trace(case_id, events, attributes))

    return make_log(f"demo-covid-seed{seed}", traces)
