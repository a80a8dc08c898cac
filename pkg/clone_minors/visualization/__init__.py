"""
Subpackage for exporting posets and natural maps.
"""

from clone_minors.visualization.hasse import poset_to_dict, poset_to_dot, poset_to_json
from clone_minors.visualization.comparison import nu_rows, nu_to_dot

__all__ = ["poset_to_dict", "poset_to_dot", "poset_to_json", "nu_rows", "nu_to_dot"]
