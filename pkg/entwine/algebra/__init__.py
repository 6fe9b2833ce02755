from .coalgebra import (Coalgebra, DualBasisData, default_names, verify_coalgebra,
                        is_coalgebra_map, dual_basis_data, convolution_mult,
                        verify_convolution_algebra, verify_dual_basis_identity,
                        group_coalgebra, comatrix_coalgebra)
from .comodule import (Comodule, verify_comodule, regular_comodule, trivial_comodule,
                       is_comodule_map, dual_comodule_structure, closure)
from .hopf import (HopfAlgebra, verify_hopf, verify_module_coalgebra,
                   cyclic_group_hopf, trivial_hopf)
