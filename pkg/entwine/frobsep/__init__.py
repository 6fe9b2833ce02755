from .families import (ThetaFamily, EtaFamily, solve_V1, verify_theta, check_F_separable,
                       solve_W1, verify_eta, check_G_separable, theta_layout, eta_layout)
from .functors import (ModuleFunctor, NatCH, build_Cstar_h, build_h_C, nat_space, verify_nat,
                       nat_layout, nat_residual)
from .evaluators import upsilon_eval, omega_eval, alpha, check_unit_counit
from .translate import v2_translate, beta_prime, w2_translate, delta_prime
from .frobenius import FrobeniusResult, check_frobenius, check_fro
from .oracle import brute_force_dimension, eta_holds, nat_holds, theta_holds
