"""Exact orders, prime spectra and maximal-subgroup screening for the
classical groups, with the shipped verification tables."""

from .orders import (order, simple_order, spectrum, pi, gl_order, gu_order,
                     sp_order, go_order, sl_order, su_order)
from .catalog import (OrderInfo, SubgroupSpec, UnsupportedSubgroupType,
                      order_info, subgroup_order)
from .screen import ScreenVerdict, screen, s_screen, omega_size, \
    allowed_ppd_indices
from .tables import RowCheck, TableRow, load_tables, tables_verify, verify_row
