"""Matrix Lie groups SO(2), SO(3), SE(2), SE(3), GL(n) and the Galilei group."""

from liemech.groups.catalog import GroupCatalogEntry, catalog_lookup, catalog_names
from liemech.groups.charts import stereographic_transition
from liemech.groups.expm import matrix_exp
from liemech.groups.galilei import GalileiTransform, galilei_apply, galilei_compose
from liemech.groups.quaternion import Quaternion, quaternion_from_axis_angle, quaternion_from_rotation
from liemech.groups.se2 import J2, Pose2, se2_adjoint, se2_bracket, se2_coadjoint, se2_hat, se2_pairing, se2_vee
from liemech.groups.se3 import Pose3, Twist, exp_se3, left_jacobian_so3, log_se3, se3_adjoint, se3_bracket
from liemech.groups.so2 import Rotation2, canonical_angle, momentum_map_so2, rot2, so2_generator_field
from liemech.groups.so3 import (
    Rotation3,
    ad_so3,
    adjoint_conjugation_check,
    bch3,
    euler_angles_to_rotation,
    exp_so3,
    hat3,
    is_rotation,
    log_so3,
    rot_x,
    rot_y,
    rot_z,
    vee3,
)

__all__ = [
    "GalileiTransform", "GroupCatalogEntry", "J2", "Pose2", "Pose3", "Quaternion", "Rotation2",
    "Rotation3", "Twist", "ad_so3", "adjoint_conjugation_check", "bch3", "canonical_angle",
    "catalog_lookup", "catalog_names", "euler_angles_to_rotation", "exp_se3", "exp_so3",
    "galilei_apply", "galilei_compose", "hat3", "is_rotation", "left_jacobian_so3", "log_se3",
    "log_so3", "matrix_exp", "momentum_map_so2", "quaternion_from_axis_angle",
    "quaternion_from_rotation", "rot2", "rot_x", "rot_y", "rot_z", "se2_adjoint", "se2_bracket",
    "se2_coadjoint", "se2_hat", "se2_pairing", "se2_vee", "se3_adjoint", "se3_bracket",
    "so2_generator_field", "stereographic_transition", "vee3",
]
