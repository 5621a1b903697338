from stringye.newtonzeta.cones import (
    SimplicialCone,
    SupportSet,
    diagonal_cone,
    fundamental_set_enumerate,
    m_value,
    scan_fundamental_set,
)
from stringye.newtonzeta.faces import FaceData, diagonal_faces
from stringye.newtonzeta.zeta import (
    ZetaExpression,
    ZetaTerm,
    face_sum_contribution,
    l_tau_specialized,
    local_hodge_zeta_diagonal,
    residue_at_q,
    residue_contribution,
    s_delta_specialized,
    substitute_t,
)

__all__ = [
    "FaceData",
    "SimplicialCone",
    "SupportSet",
    "ZetaExpression",
    "ZetaTerm",
    "diagonal_cone",
    "diagonal_faces",
    "face_sum_contribution",
    "fundamental_set_enumerate",
    "l_tau_specialized",
    "local_hodge_zeta_diagonal",
    "m_value",
    "residue_at_q",
    "residue_contribution",
    "s_delta_specialized",
    "scan_fundamental_set",
    "substitute_t",
]
