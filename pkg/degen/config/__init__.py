from .conf import (get_confpath, load_default_conf, load_conf,
                   check_conf, ConfigurationError, get_output_dir)
from .conf import truncation_policy, fd_config, inversion_config
