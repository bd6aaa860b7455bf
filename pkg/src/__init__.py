"""
flagtwist - exact arithmetic on the flag threefold.

Gaussian-rational linear algebra, bihomogeneous forms modulo p.l, conic and
twistor-fiber configurations, linear systems |I_A(a,b)| and the scenario
harness behind the `flagtwist` command line (`python -m src`).
"""
