"""
Verification campaigns, reports and the command-line interface.
"""
from . import campaigns
from .instances import FAMILIES, parse_ints, descriptor_from_params, handle_from_descriptor, resolve
from .report import export_dot, write_report, read_report, replay
