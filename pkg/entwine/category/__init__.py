from .lincat import LinCategory, verify_category, point_category, algebra_category
from .modules import (RightModule, LeftModule, ModuleMorphism, KernelCokernel,
                      verify_right_module, verify_left_module, representable_right,
                      representable_left, is_module_morphism, module_hom_space,
                      kernel_cokernel)
from .subcategory import Subcategory, verify_subcategory
from .tensor import TensorOverSub, tensor_over_sub
from .bimodule import Bimodule, BimoduleTensor, hom_bimodule, verify_bimodule
