"""Multi-asset closed-loop reservoir management at desk scale.

Subpackages cover ensemble geostatistics, incompressible two-phase
water-flood simulation, per-step cash-flow accounting, a POMDP well-control
environment, a small reverse-mode autodiff stack with the policy network
built on it, a PPO trainer, and the experiment harness/CLI.
"""

__version__ = "0.1.0"
