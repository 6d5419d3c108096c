#!/usr/bin/env python3
"""Writes the Carcassonne/Aude fixture series used by the tests and demos.

The 2010-2018 series are a seeded synthetic climatology in the same format as
the archive extracts (daily rain at one station, daily departmental flood
vigilance colour). The October 2018 episode is curated by hand: 139.8 mm on
2018-10-14 under an Orange vigilance, raised to Red on 2018-10-15.

Usage: make_fixture_series.py OUT_DIR
"""

import datetime as dt
import math
import random
import sys
from pathlib import Path

START = dt.date(2010, 1, 1)
END = dt.date(2018, 12, 31)
SEED = 20181014

# Hand-curated October 2018 days: (rain mm, vigilance colour or None).
OCTOBER_2018 = {
    1: (0.0, None), 2: (0.0, None), 3: (0.2, None), 4: (0.0, None),
    5: (1.4, None), 6: (0.0, None), 7: (0.0, None), 8: (2.6, None),
    9: (8.8, "yellow"), 10: (4.1, None), 11: (0.0, None), 12: (0.0, None),
    13: (0.4, None), 14: (139.8, "orange"), 15: (31.2, "red"), 16: (3.8, "orange"),
    17: (0.0, None), 18: (0.0, None), 19: (0.0, None), 20: (0.6, None),
    21: (0.0, None), 22: (0.0, None), 23: (5.2, None), 24: (1.0, None),
    25: (0.0, None), 26: (0.0, None), 27: (7.4, None), 28: (12.6, "yellow"),
    29: (2.2, None), 30: (0.0, None), 31: (0.0, None),
}


def wet_probability(day: dt.date) -> float:
    # Wetter in autumn and spring, dry in July.
    phase = 2.0 * math.pi * (day.timetuple().tm_yday - 200) / 365.25
    return 0.22 - 0.10 * math.cos(phase)


def rain_amount(rng: random.Random, day: dt.date) -> float:
    if rng.random() >= wet_probability(day):
        return 0.0
    amount = rng.gammavariate(0.7, 7.0)
    if day.month in (9, 10, 11) and rng.random() < 0.03:
        amount += rng.uniform(40.0, 110.0)
    return round(amount, 1)


def colour_for(rng: random.Random, day: dt.date, rain: float) -> str | None:
    if rain >= 90.0:
        return "red" if rng.random() < 0.3 else "orange"
    if rain >= 40.0:
        return "orange" if rng.random() < 0.7 else "yellow"
    if rain >= 15.0 and rng.random() < 0.5:
        return "yellow"
    if day.month in (9, 10, 11, 12) and rng.random() < 0.04:
        return "orange"
    if rng.random() < 0.02:
        return "yellow"
    return None


def main() -> None:
    out = Path(sys.argv[1])
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)

    rain_rows = ["date,rain_mm"]
    vigilance_rows = ["date,colour"]
    day = START
    while day <= END:
        rain = rain_amount(rng, day)
        colour = colour_for(rng, day, rain)
        if day.year == 2018 and day.month == 10:
            rain, colour = OCTOBER_2018[day.day]
        rain_rows.append(f"{day.isoformat()},{rain:.1f}")
        if colour is not None:
            vigilance_rows.append(f"{day.isoformat()},{colour}")
            # Some archive days carry several bulletins; the loader keeps the highest.
            if colour == "red":
                vigilance_rows.append(f"{day.isoformat()},orange")
        day += dt.timedelta(days=1)

    (out / "carcassonne_rain_2010_2018.csv").write_text("\n".join(rain_rows) + "\n")
    (out / "aude_vigilance_2010_2018.csv").write_text("\n".join(vigilance_rows) + "\n")


if __name__ == "__main__":
    main()
