//! Gate alphabet: fixed Cliffords + T, multi-controlled X and the Pauli
//! rotations RP(theta) = exp(-i*theta*P/2) for P in {X, Y, Z, XX, YY, ZZ}.

use super::error::QsimError;
use crate::scalar::Real;

/// Gate kinds understood by the simulator and the resource analyzer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GateKind {
    I,
    X,
    Y,
    Z,
    H,
    S,
    T,
    Cx,
    Ccx,
    Mcx,
    Rx,
    Ry,
    Rz,
    Xx,
    Yy,
    Zz,
}

impl GateKind {
    pub fn name(self) -> &'static str {
        match self {
            GateKind::I => "I",
            GateKind::X => "X",
            GateKind::Y => "Y",
            GateKind::Z => "Z",
            GateKind::H => "H",
            GateKind::S => "S",
            GateKind::T => "T",
            GateKind::Cx => "CX",
            GateKind::Ccx => "CCX",
            GateKind::Mcx => "MCX",
            GateKind::Rx => "RX",
            GateKind::Ry => "RY",
            GateKind::Rz => "RZ",
            GateKind::Xx => "XX",
            GateKind::Yy => "YY",
            GateKind::Zz => "ZZ",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "I" => GateKind::I,
            "X" => GateKind::X,
            "Y" => GateKind::Y,
            "Z" => GateKind::Z,
            "H" => GateKind::H,
            "S" => GateKind::S,
            "T" => GateKind::T,
            "CX" => GateKind::Cx,
            "CCX" => GateKind::Ccx,
            "MCX" => GateKind::Mcx,
            "RX" => GateKind::Rx,
            "RY" => GateKind::Ry,
            "RZ" => GateKind::Rz,
            "XX" => GateKind::Xx,
            "YY" => GateKind::Yy,
            "ZZ" => GateKind::Zz,
            _ => return None,
        })
    }

    /// True for the rotation kinds that carry an angle.
    pub fn is_parametric(self) -> bool {
        matches!(
            self,
            GateKind::Rx | GateKind::Ry | GateKind::Rz | GateKind::Xx | GateKind::Yy | GateKind::Zz
        )
    }

    fn target_arity(self) -> usize {
        match self {
            GateKind::Xx | GateKind::Yy | GateKind::Zz => 2,
            _ => 1,
        }
    }

    /// Fixed control count, or `None` when variable (MCX).
    fn control_arity(self) -> Option<usize> {
        match self {
            GateKind::Cx => Some(1),
            GateKind::Ccx => Some(2),
            GateKind::Mcx => None,
            _ => Some(0),
        }
    }
}

/// Angle of a parametric gate: bound now, or resolved from a parameter
/// vector at run time.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GateParam<T> {
    Fixed(T),
    Slot(usize),
}

/// One gate instance: kind, target qubits, control qubits and (for the
/// rotation kinds) an angle or parameter slot.
#[derive(Clone, Debug, PartialEq)]
pub struct Gate<T> {
    kind: GateKind,
    targets: Vec<usize>,
    controls: Vec<usize>,
    param: Option<GateParam<T>>,
}

impl<T: Real> Gate<T> {
    fn single(kind: GateKind, q: usize) -> Self {
        Gate {
            kind,
            targets: vec![q],
            controls: Vec::new(),
            param: None,
        }
    }

    pub fn i(q: usize) -> Self {
        Self::single(GateKind::I, q)
    }
    pub fn x(q: usize) -> Self {
        Self::single(GateKind::X, q)
    }
    pub fn y(q: usize) -> Self {
        Self::single(GateKind::Y, q)
    }
    pub fn z(q: usize) -> Self {
        Self::single(GateKind::Z, q)
    }
    pub fn h(q: usize) -> Self {
        Self::single(GateKind::H, q)
    }
    pub fn s(q: usize) -> Self {
        Self::single(GateKind::S, q)
    }
    pub fn t(q: usize) -> Self {
        Self::single(GateKind::T, q)
    }

    pub fn cx(control: usize, target: usize) -> Self {
        Gate {
            kind: GateKind::Cx,
            targets: vec![target],
            controls: vec![control],
            param: None,
        }
    }

    pub fn ccx(c0: usize, c1: usize, target: usize) -> Self {
        Gate {
            kind: GateKind::Ccx,
            targets: vec![target],
            controls: vec![c0, c1],
            param: None,
        }
    }

    pub fn mcx(controls: Vec<usize>, target: usize) -> Self {
        Gate {
            kind: GateKind::Mcx,
            targets: vec![target],
            controls,
            param: None,
        }
    }

    fn rotation(kind: GateKind, targets: Vec<usize>, param: GateParam<T>) -> Self {
        Gate {
            kind,
            targets,
            controls: Vec::new(),
            param: Some(param),
        }
    }

    pub fn rx(q: usize, theta: T) -> Self {
        Self::rotation(GateKind::Rx, vec![q], GateParam::Fixed(theta))
    }
    pub fn ry(q: usize, theta: T) -> Self {
        Self::rotation(GateKind::Ry, vec![q], GateParam::Fixed(theta))
    }
    pub fn rz(q: usize, theta: T) -> Self {
        Self::rotation(GateKind::Rz, vec![q], GateParam::Fixed(theta))
    }
    pub fn xx(q0: usize, q1: usize, theta: T) -> Self {
        Self::rotation(GateKind::Xx, vec![q0, q1], GateParam::Fixed(theta))
    }
    pub fn yy(q0: usize, q1: usize, theta: T) -> Self {
        Self::rotation(GateKind::Yy, vec![q0, q1], GateParam::Fixed(theta))
    }
    pub fn zz(q0: usize, q1: usize, theta: T) -> Self {
        Self::rotation(GateKind::Zz, vec![q0, q1], GateParam::Fixed(theta))
    }

    pub fn rx_slot(q: usize, slot: usize) -> Self {
        Self::rotation(GateKind::Rx, vec![q], GateParam::Slot(slot))
    }
    pub fn ry_slot(q: usize, slot: usize) -> Self {
        Self::rotation(GateKind::Ry, vec![q], GateParam::Slot(slot))
    }
    pub fn rz_slot(q: usize, slot: usize) -> Self {
        Self::rotation(GateKind::Rz, vec![q], GateParam::Slot(slot))
    }
    pub fn xx_slot(q0: usize, q1: usize, slot: usize) -> Self {
        Self::rotation(GateKind::Xx, vec![q0, q1], GateParam::Slot(slot))
    }
    pub fn yy_slot(q0: usize, q1: usize, slot: usize) -> Self {
        Self::rotation(GateKind::Yy, vec![q0, q1], GateParam::Slot(slot))
    }
    pub fn zz_slot(q0: usize, q1: usize, slot: usize) -> Self {
        Self::rotation(GateKind::Zz, vec![q0, q1], GateParam::Slot(slot))
    }

    pub(crate) fn with_parts(
        kind: GateKind,
        targets: Vec<usize>,
        controls: Vec<usize>,
        param: Option<GateParam<T>>,
    ) -> Self {
        Gate {
            kind,
            targets,
            controls,
            param,
        }
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn controls(&self) -> &[usize] {
        &self.controls
    }

    pub fn param(&self) -> Option<&GateParam<T>> {
        self.param.as_ref()
    }

    /// Parameter slot index when the angle is unbound.
    pub fn param_slot(&self) -> Option<usize> {
        match self.param {
            Some(GateParam::Slot(s)) => Some(s),
            _ => None,
        }
    }

    /// All qubits the gate acts on (targets then controls).
    pub fn qubits(&self) -> impl Iterator<Item = usize> + '_ {
        self.targets.iter().chain(self.controls.iter()).copied()
    }

    /// Resolve the angle against a parameter vector.
    pub(crate) fn bound_theta(&self, theta: &[T]) -> Result<Option<T>, QsimError> {
        match self.param {
            None => Ok(None),
            Some(GateParam::Fixed(v)) => Ok(Some(v)),
            Some(GateParam::Slot(s)) => theta
                .get(s)
                .copied()
                .map(Some)
                .ok_or(QsimError::UnboundParameter { slot: s }),
        }
    }

    /// Structural validation against a register size.
    pub fn validate(&self, num_qubits: usize) -> Result<(), QsimError> {
        let kind = self.kind.name();
        let expected_targets = self.kind.target_arity();
        if self.targets.len() != expected_targets {
            return Err(QsimError::WrongTargetCount {
                kind,
                expected: expected_targets,
                got: self.targets.len(),
            });
        }
        match self.kind.control_arity() {
            Some(expected) => {
                if self.controls.len() != expected {
                    return Err(QsimError::WrongControlCount {
                        kind,
                        expected,
                        got: self.controls.len(),
                    });
                }
            }
            None => {
                if self.controls.is_empty() {
                    return Err(QsimError::EmptyControls);
                }
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for q in self.qubits() {
            if q >= num_qubits {
                return Err(QsimError::QubitOutOfRange {
                    qubit: q,
                    num_qubits,
                });
            }
            if !seen.insert(q) {
                return Err(QsimError::DuplicateQubit { qubit: q });
            }
        }
        if self.kind.is_parametric() {
            if self.param.is_none() {
                return Err(QsimError::MissingParameter { kind });
            }
        } else if self.param.is_some() {
            return Err(QsimError::UnexpectedParameter { kind });
        }
        Ok(())
    }
}
