//! Parameter-shift gradients.
//!
//! Every parametric gate is exp(-i*theta*P/2) for a Pauli string P, so the
//! shift rule is exact: d<O>/d theta_k = [f(theta_k + pi/2) - f(theta_k -
//! pi/2)] / 2. Expanding G(theta +- pi/2) = (I -+ iP) G(theta) / sqrt(2)
//! turns that difference into Im <v_k| P |s_k>, with s_k the state after
//! gate k and v_k the observable pulled back through the suffix. Both
//! vectors evolve during one backward sweep, so all gradient entries cost
//! O(circuit length) gate applications instead of two fresh simulations per
//! parameter. Gates sharing a slot accumulate one term per occurrence.

use rayon::prelude::*;

use super::error::QnnError;
use super::loss::hinge_loss;
use super::model::QnnModel;
use crate::imgdata::Label;
use crate::qsim::{
    pauli_bilinear, Circuit, Gate, GateKind, Pauli, PauliObservable, PauliString, Statevector,
};
use crate::scalar::Real;

/// Value and gradient of <obs> after running `circuit` from `input_state`,
/// differentiated with respect to every parameter slot.
pub fn expectation_gradient<T: Real>(
    circuit: &Circuit<T>,
    input_state: &Statevector<T>,
    obs: &PauliObservable<T>,
    theta: &[T],
) -> Result<(T, Vec<T>), QnnError> {
    if theta.len() != circuit.num_params() {
        return Err(QnnError::Sim(crate::qsim::QsimError::ParamCountMismatch {
            expected: circuit.num_params(),
            got: theta.len(),
        }));
    }
    let mut s = input_state.clone();
    for gate in circuit.gates() {
        s.apply_bound(gate, theta)?;
    }
    let value = obs.expectation(&s)?;
    let mut grads = vec![T::zero(); circuit.num_params()];
    let first_param = circuit
        .gates()
        .iter()
        .position(|g| g.param_slot().is_some());
    let first_param = match first_param {
        Some(i) => i,
        None => return Ok((value, grads)),
    };

    // v = O * s, then both states are unwound gate by gate.
    let mut v = apply_observable(obs, &s);
    for (k, gate) in circuit.gates().iter().enumerate().rev() {
        if let Some(slot) = gate.param_slot() {
            let p = generator(gate)?;
            grads[slot] += pauli_bilinear(&v, &p, &s).im;
        }
        if k == first_param {
            break;
        }
        s.apply_bound_inverse(gate, theta)?;
        v.apply_bound_inverse(gate, theta)?;
    }
    Ok((value, grads))
}

fn apply_observable<T: Real>(obs: &PauliObservable<T>, state: &Statevector<T>) -> Statevector<T> {
    let mut terms = obs.terms().iter();
    let (coef0, string0) = terms.next().expect("observable has at least one term");
    let mut out = state.clone();
    string0.apply_to(&mut out);
    scale_state(&mut out, *coef0);
    for (coef, string) in terms {
        let mut term = state.clone();
        string.apply_to(&mut term);
        add_scaled(&mut out, &term, *coef);
    }
    out
}

fn scale_state<T: Real>(state: &mut Statevector<T>, c: T) {
    if c != T::one() {
        for a in state.amplitudes_mut() {
            *a = a.scale(c);
        }
    }
}

fn add_scaled<T: Real>(dst: &mut Statevector<T>, src: &Statevector<T>, c: T) {
    for (d, s) in dst.amplitudes_mut().iter_mut().zip(src.amplitudes()) {
        *d = *d + s.scale(c);
    }
}

/// Pauli generator of a rotation gate: RP(theta) = exp(-i*theta*P/2).
fn generator<T: Real>(gate: &Gate<T>) -> Result<PauliString, QnnError> {
    let t = gate.targets();
    let string = match gate.kind() {
        GateKind::Rx => PauliString::single(t[0], Pauli::X),
        GateKind::Ry => PauliString::single(t[0], Pauli::Y),
        GateKind::Rz => PauliString::single(t[0], Pauli::Z),
        GateKind::Xx => PauliString::new(vec![(t[0], Pauli::X), (t[1], Pauli::X)])?,
        GateKind::Yy => PauliString::new(vec![(t[0], Pauli::Y), (t[1], Pauli::Y)])?,
        GateKind::Zz => PauliString::new(vec![(t[0], Pauli::Z), (t[1], Pauli::Z)])?,
        other => {
            // non-parametric kinds never carry a slot
            unreachable!("gate {} has a parameter slot", other.name())
        }
    };
    Ok(string)
}

/// Per-example value and gradient of the model readout.
pub fn forward_and_gradient<T: Real>(
    model: &QnnModel<T>,
    input_state: &Statevector<T>,
    theta: &[T],
) -> Result<(T, Vec<T>), QnnError> {
    expectation_gradient(model.circuit(), input_state, model.observable(), theta)
}

/// Gradient of the batch-averaged hinge loss via the parameter-shift rule,
/// using the subgradient 0 where the margin y*f is >= 1 (ties included) and
/// -y * d f elsewhere.
pub fn grad_parameter_shift<T: Real>(
    model: &QnnModel<T>,
    inputs: &[Circuit<T>],
    labels: &[Label],
    theta: &[T],
) -> Result<Vec<T>, QnnError> {
    if inputs.is_empty() {
        return Err(QnnError::EmptyDataset);
    }
    if inputs.len() != labels.len() {
        return Err(QnnError::LengthMismatch {
            inputs: inputs.len(),
            labels: labels.len(),
        });
    }
    let states: Vec<Statevector<T>> = inputs
        .par_iter()
        .map(|c| model.input_state(c))
        .collect::<Result<_, _>>()?;
    grad_hinge_from_states(model, &states, labels, theta)
}

/// Hinge-loss gradient over prepared input states (training fast path).
pub(crate) fn grad_hinge_from_states<T: Real>(
    model: &QnnModel<T>,
    states: &[Statevector<T>],
    labels: &[Label],
    theta: &[T],
) -> Result<Vec<T>, QnnError> {
    let per_example: Vec<(T, Vec<T>)> = states
        .par_iter()
        .map(|s| forward_and_gradient(model, s, theta))
        .collect::<Result<_, _>>()?;
    let mut grad = vec![T::zero(); theta.len()];
    for (&label, (f, g)) in labels.iter().zip(&per_example) {
        let y = label.sign::<T>();
        if y * *f < T::one() {
            for (acc, &gi) in grad.iter_mut().zip(g) {
                *acc -= y * gi;
            }
        }
    }
    let scale = T::one() / T::of(states.len() as f64);
    for g in &mut grad {
        *g *= scale;
    }
    Ok(grad)
}

/// Batch hinge loss at fixed parameters (used by gradient checks).
pub fn batch_loss<T: Real>(
    model: &QnnModel<T>,
    inputs: &[Circuit<T>],
    labels: &[Label],
    theta: &[T],
) -> Result<T, QnnError> {
    let mut total = T::zero();
    for (input, &label) in inputs.iter().zip(labels) {
        let f = model.forward(input, theta)?;
        total += hinge_loss(label, f);
    }
    Ok(total / T::of(inputs.len() as f64))
}
