#
# DOT export, JSON reports and replay of failed records
#
import json
import logging

from mbg.common import Campaign, CampaignResults, Status, REPORT_SCHEMA
from mbg.common.errors import BadParams
from mbg.matroid import cycle_edge

__all__ = ['export_dot', 'write_report', 'read_report', 'replay']

logger = logging.getLogger(__name__)

COLORS = ('red', 'blue', 'darkgreen', 'orange', 'purple', 'brown')


def _highlight_edges(item):
    if hasattr(item, 'edges'):
        return item.edges()
    return frozenset(cycle_edge(u, v) for u, v in item)


def export_dot(bg, highlights=None, name='BG'):
    """
    Returns a DOT description of a basis graph.

    Vertices are listed in index order and labeled by their bases;
    edges are listed in lexicographic order.

    Parameters
    ----------
    bg: BasisGraph
    highlights: list
        Good cycles, or edge sets, drawn in colour.  The i-th item gets
        the i-th colour of a fixed palette.  An edge on several items
        takes the colour of the first.
    name: str
        The graph name.

    Returns
    -------
    str
    """
    colour = {}
    for i, item in enumerate(highlights or []):
        for edge in sorted(_highlight_edges(item)):
            colour.setdefault(edge, COLORS[i % len(COLORS)])
    lines = ["graph %s {" % name, "  node [shape=box];"]
    for v in range(len(bg)):
        lines.append('  %d [label="{%s}"];' % (v, ",".join(str(x) for x in sorted(bg.basis(v)))))
    for u, v in sorted(bg.edges()):
        if (u, v) in colour:
            lines.append("  %d -- %d [color=%s, penwidth=2];" % (u, v, colour[u, v]))
        else:
            lines.append("  %d -- %d;" % (u, v))
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_report(results, filename):
    with open(filename, 'w') as OUTPUT:
        OUTPUT.write(results.dumps())
        OUTPUT.write("\n")


def read_report(filename):
    """
    Returns the JSON data of a report or a single record.

    Raises
    ------
    BadParams
        The file is not a report with a supported schema or a record.
    """
    with open(filename, 'r') as INPUT:
        data = json.load(INPUT)
    if 'records' in data:
        if data.get('schema') != REPORT_SCHEMA:
            raise BadParams("Unsupported report schema %s in '%s'" % (data.get('schema'), filename))
    elif 'instance' not in data or 'edge' not in data:
        raise BadParams("'%s' is neither a report nor a verification record" % filename)
    return data


def replay(data, campaign=None):
    """
    Re-check the failed records of a report, or one record.

    Parameters
    ----------
    data: dict
        A report from :func:`read_report`, or a single record.
    campaign: str
        The campaign that verifies a single record.  Reports name their
        own campaign.

    Returns
    -------
    CampaignResults
        The new records, verified with the report's configuration.
    """
    if 'records' in data:
        name = data['campaign']
        config = data.get('config', {})
        records = [r for r in data['records'] if r['status'] == Status.FAIL.label]
    else:
        name = campaign
        config = {}
        records = [data]
    if name is None or name not in Campaign:
        raise BadParams("Replaying a record needs a known campaign, not '%s'" % str(name))
    runner = Campaign(name, **config)
    results = CampaignResults(name, runner.config.value())
    for record in records:
        logger.info("Replaying %s edge %s", json.dumps(record['instance'], sort_keys=True), record['edge'])
        results.records.append(runner.verify(record['instance'], tuple(record['edge'])))
    return results
