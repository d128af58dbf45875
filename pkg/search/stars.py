"""
Star Hosts and Star Incomparability

Closed forms for stars counted in the star hosts H_{m,n} (m sources into a
centre, n sinks out of it), and explicit witnesses separating any two stars
with the same number of arcs.
"""

import logging
from typing import List, Optional

from digraph.trees import make_star
from homcount.general import hom_general
from homcount.tree import star_hom
from inequalities.report import BoundReport, exact_report, identity_report
from models.generators import star_host

from .verdict import HostWitness, WitnessRecord

logger = logging.getLogger(__name__)

DEFAULT_WITNESS_LIMIT = 8


def star_incomparability_suite(h: int, m: int, n: int) -> List[BoundReport]:
    """
    Reports for one (h, m, n):
    - star-on-hmn: hom(S_{a,h-a}, H_{m,n}) == m^a n^(h-a) for 1 <= a <= h-1
    - star-pure-host: hom(S_{c,h-c}, H_{m,0}) == 0 for 1 <= c <= h-1, and the
      mirror statement on H_{0,n}
    - star-pure-peak: m^h <= hom(S_{h,0}, H_{m,0}) and n^h <= hom(S_{0,h}, H_{0,n})

    Counts come from the general backtracking counter.
    """
    if h < 1:
        raise ValueError(f"Star size must be at least 1, got {h}")
    if m < 0 or n < 0:
        raise ValueError(f"Star host needs m, n >= 0, got ({m}, {n})")

    mixed = star_host(m, n)
    pure_in = star_host(m, 0)
    pure_out = star_host(0, n)
    reports = []

    for a in range(1, h):
        star = make_star(a, h - a).to_digraph()
        reports.append(identity_report(
            "star-on-hmn",
            hom_general(star, mixed),
            m ** a * n ** (h - a),
            {"h": h, "a": a, "m": m, "n": n},
        ))
        reports.append(identity_report(
            "star-pure-host", hom_general(star, pure_in), 0, {"h": h, "c": a, "host": f"H_{{{m},0}}"},
        ))
        reports.append(identity_report(
            "star-pure-host", hom_general(star, pure_out), 0, {"h": h, "c": a, "host": f"H_{{0,{n}}}"},
        ))

    reports.append(exact_report(
        "star-pure-peak", m ** h, hom_general(make_star(h, 0).to_digraph(), pure_in), {"h": h, "m": m},
    ))
    reports.append(exact_report(
        "star-pure-peak", n ** h, hom_general(make_star(0, h).to_digraph(), pure_out), {"h": h, "n": n},
    ))
    return reports


def construct_star_witness(h: int, a: int, b: int, limit: int = DEFAULT_WITNESS_LIMIT) -> Optional[WitnessRecord]:
    """
    Witness pair for S_{a,h-a} against S_{b,h-b} among the star hosts H_{m,n},
    0 <= m, n <= limit, scanned in (m + n, m) order.

    Returns None when a == b or when no star host up to the limit separates them.
    """
    if a == b:
        return None
    gt: Optional[HostWitness] = None
    lt: Optional[HostWitness] = None
    for total in range(2 * limit + 1):
        for m in range(max(0, total - limit), min(total, limit) + 1):
            host = star_host(m, total - m)
            counts = (star_hom(a, h - a, host), star_hom(b, h - b, host))
            if gt is None and counts[0] > counts[1]:
                gt = HostWitness(host, counts)
            elif lt is None and counts[0] < counts[1]:
                lt = HostWitness(host, counts)
            if gt is not None and lt is not None:
                logger.debug(f"S_{{{a},{h - a}}} vs S_{{{b},{h - b}}} separated by H_{{m,n}} with m+n <= {total}")
                return WitnessRecord(make_star(a, h - a), make_star(b, h - b), gt, lt)
    return None
