"""
Output module - Result formatters

Contains formatters for different output formats:
- JSON documents carrying the schema version
- Text tables for bound reports and suite summaries
- Witness and verdict tables in the published row layout
"""

from .formatters import format_appendix, format_suites, format_verdicts, host_bits, to_json, to_text

__all__ = ['to_json', 'to_text', 'format_suites', 'format_verdicts', 'format_appendix', 'host_bits']
