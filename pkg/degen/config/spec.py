from .. import __version__

configspec = """
[main]

# If true debug mode is on which means exceptions are not catched and
# the full python stack is printed.
debug = boolean(default=False)

# Directory where data files and their manifests are written when a command
# is given a relative --output path. Empty means the current directory.
# The environment variable DEGEN_OUTPUT_DIR takes precedence.
output_dir = string(default='')

# Default format of the data written by commands.
format = option('csv', 'json', default='csv')

[series]

# Number of zeros of J0 kept in the shared table.
capacity = integer(min=3, max=10000, default=2048)

# Hard cap on the number of modes summed in a series.
max_terms = integer(min=1, default=2000)

# Bound required on the discarded tail of every series.
tail_tol = float(min=0, default=1e-12)

# Smallest admissible evaluation time.
t_min = float(min=0, default=1e-4)

# Absolute tolerance of the weight quadratures (polynomial and sampled data).
quad_tol = float(min=0, default=1e-11)

[fd]

# Cells and time steps of the finite volume oracle.
nx = integer(min=16, default=800)
nt = integer(min=16, default=2000)
scheme = option('backward-euler', 'crank-nicolson', default='crank-nicolson')

[inversion]

# Admissible interval is [delta, 1 - delta].
delta = float(min=0, max=0.5, default=0.01)

# Number of equispaced starts added to the initial guess.
multistart = integer(min=0, default=9)

tol_a = float(min=0, default=1e-10)
max_iters = integer(min=1, default=200)

# Locate minima from the analytic derivative of the cost instead of
# bounded Brent search.
use_derivative = boolean(default=False)

noise_distribution = option('uniform', 'gaussian', default='uniform')

# Resolution of the scans looking for observation collisions.
collision_grid = integer(min=2, default=512)

[internal]
# The version of this configuration file. Do not edit.
version = string(min=5, default='{}')

""".format(__version__).split('\n')
