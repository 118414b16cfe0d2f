import dotdot
from degen import bessel, spectral
from degen.initial_data import InitialProfile


table = bessel.shared_table(2048)
policy = spectral.TruncationPolicy()

const_one = InitialProfile.const_one()
one_minus_x = InitialProfile.one_minus_x()
x_one_minus_x = InitialProfile.x_one_minus_x()
identity = InitialProfile.identity()

named_profiles = [const_one, one_minus_x, x_one_minus_x, identity]

# x on [0, 1] given as samples, and 1 - x^2 as a polynomial
sampled_identity = InitialProfile.sampled([0., .25, .5, .75, 1.], [0., .25, .5, .75, 1.])
one_minus_x2 = InitialProfile.polynomial([1., 0., -1.])

observations_csv = """t,beta
0.05,0.25
0.1,0.125
"""

samples_csv = """x,value
0,1
0.5,0.5
1,0
"""


def trace(profile, a, t, pol=policy):
    return spectral.boundary_trace(spectral.TraceQuery(profile, a, t, table, pol))
