# Spectral series
from . import zeros_cmd
from . import trace_cmd
from . import scan_cmd
from . import fdcheck_cmd
# Inversion
from . import invert_cmd
from . import tables_cmd
# Non-uniqueness
from . import alias_cmd
from . import collide_cmd
