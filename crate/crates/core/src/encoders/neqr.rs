//! NEQR state preparation: |I> = 2^{-n} sum_{y,x} |f(y,x)>|yx>.
//!
//! Register layout for a 2^n x 2^n image with gray range 2^q:
//! * qubits 0..q-1 hold the grayscale bits, bit i on qubit i;
//! * qubits q..q+2n-1 hold the position |yx>, x bits then y bits, least
//!   significant first, so position value p = y*2^n + x sits on qubit q+j
//!   for bit j of p.
//!
//! The preparation circuit puts every position qubit in superposition with
//! H, marks the grayscale qubits with I, then writes each pixel's set bits
//! with MCX gates controlled on the full position register, using
//! X-conjugation to condition on zero-valued position bits. Compression
//! merges the per-bit-plane position minterms into larger cubes, dropping
//! controls.

use std::collections::BTreeMap;

use super::compress::{merge_implicants, Implicant};
use super::error::EncodeError;
use crate::imgdata::GrayImage;
use crate::qsim::{Circuit, Gate, GateKind, Statevector};
use crate::scalar::Real;

/// Shape of a NEQR encoding: 2^n x 2^n pixels at q-bit gray depth on
/// q + 2n qubits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NeqrSpec {
    n: usize,
    q: usize,
}

impl NeqrSpec {
    pub fn new(n: usize, q: usize) -> Result<Self, EncodeError> {
        if q == 0 || q > 8 {
            return Err(EncodeError::BadBitDepth { q });
        }
        Ok(NeqrSpec { n, q })
    }

    /// Spec for a concrete image, validating shape and pixel range.
    pub fn for_image(image: &GrayImage, q: usize) -> Result<Self, EncodeError> {
        let side = image.width();
        if image.height() != side || side == 0 || !side.is_power_of_two() {
            return Err(EncodeError::BadImageShape {
                width: image.width(),
                height: image.height(),
            });
        }
        let spec = NeqrSpec::new(side.trailing_zeros() as usize, q)?;
        if q < 8 {
            let max = (1u16 << q) as u16;
            for &p in image.pixels() {
                if p as u16 >= max {
                    return Err(EncodeError::PixelOutOfRange { value: p, q });
                }
            }
        }
        Ok(spec)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn side(&self) -> usize {
        1 << self.n
    }

    pub fn total_qubits(&self) -> usize {
        self.q + 2 * self.n
    }

    fn position_bits(&self) -> usize {
        2 * self.n
    }
}

/// Build the NEQR preparation circuit for a square power-of-two image.
pub fn neqr_encode<T: Real>(image: &GrayImage, q: usize) -> Result<Circuit<T>, EncodeError> {
    let spec = NeqrSpec::for_image(image, q)?;
    let planes = image_bit_planes(image, &spec);
    Ok(emit(&spec, &planes))
}

/// State-equivalent circuit with per-bit-plane minterms merged; never larger
/// than the input.
pub fn neqr_compress<T: Real>(circuit: &Circuit<T>, spec: &NeqrSpec) -> Circuit<T> {
    let planes = match recover_bit_planes(circuit, spec) {
        Some(p) => p,
        // not a recognizable NEQR preparation; leave it untouched
        None => return circuit.clone(),
    };
    let merged: Vec<Vec<Implicant>> = planes.into_iter().map(merge_implicants).collect();
    let out = emit(spec, &merged);
    if out.size() <= circuit.size() {
        out
    } else {
        circuit.clone()
    }
}

/// Reconstruct the image from a NEQR state: each position must hold exactly
/// one grayscale value with amplitude magnitude above 2^{-n} - 1e-6.
pub fn neqr_readback<T: Real>(
    state: &Statevector<T>,
    spec: &NeqrSpec,
) -> Result<GrayImage, EncodeError> {
    if state.num_qubits() != spec.total_qubits() {
        return Err(EncodeError::QubitMismatch {
            state_qubits: state.num_qubits(),
            expected: spec.total_qubits(),
        });
    }
    let side = spec.side();
    let threshold = T::of(0.5f64.powi(spec.n as i32) - 1e-6);
    let mut pixels = vec![0u8; side * side];
    for p in 0..side * side {
        let mut found: Option<usize> = None;
        let mut candidates = 0;
        for g in 0..(1usize << spec.q) {
            if state.amp(g + (p << spec.q)).norm() > threshold {
                candidates += 1;
                found = Some(g);
            }
        }
        if candidates != 1 {
            return Err(EncodeError::CorruptState {
                position: p,
                candidates,
            });
        }
        pixels[p] = found.unwrap() as u8;
    }
    // position p = y*side + x matches row-major pixel order
    Ok(GrayImage::new(side, side, pixels).expect("sized buffer"))
}

fn image_bit_planes(image: &GrayImage, spec: &NeqrSpec) -> Vec<Vec<Implicant>> {
    let side = spec.side();
    let bits = spec.position_bits();
    let mut planes: Vec<Vec<Implicant>> = vec![Vec::new(); spec.q];
    for y in 0..side {
        for x in 0..side {
            let p = (y * side + x) as u32;
            let f = image.pixel(x, y);
            for (i, plane) in planes.iter_mut().enumerate() {
                if f >> i & 1 == 1 {
                    plane.push(Implicant::minterm(p, bits));
                }
            }
        }
    }
    planes
}

/// Emit the preparation circuit from per-plane implicants: H on the position
/// register, I markers on the grayscale register, then the controlled writes
/// grouped by control pattern so X-conjugation is shared.
fn emit<T: Real>(spec: &NeqrSpec, planes: &[Vec<Implicant>]) -> Circuit<T> {
    let mut circuit = Circuit::new(spec.total_qubits());
    let pos_base = spec.q;
    for j in 0..spec.position_bits() {
        circuit.push(Gate::h(pos_base + j)).unwrap();
    }
    for i in 0..spec.q {
        circuit.push(Gate::i(i)).unwrap();
    }

    let mut groups: BTreeMap<Implicant, Vec<usize>> = BTreeMap::new();
    for (plane, cubes) in planes.iter().enumerate() {
        for &cube in cubes {
            groups.entry(cube).or_default().push(plane);
        }
    }

    for (cube, mut targets) in groups {
        targets.sort_unstable();
        let conjugated: Vec<usize> = (0..spec.position_bits())
            .filter(|j| cube.mask >> j & 1 == 1 && cube.value >> j & 1 == 0)
            .map(|j| pos_base + j)
            .collect();
        let controls: Vec<usize> = (0..spec.position_bits())
            .filter(|j| cube.mask >> j & 1 == 1)
            .map(|j| pos_base + j)
            .collect();
        for &qb in &conjugated {
            circuit.push(Gate::x(qb)).unwrap();
        }
        for &plane in &targets {
            if controls.is_empty() {
                circuit.push(Gate::x(plane)).unwrap();
            } else {
                circuit.push(Gate::mcx(controls.clone(), plane)).unwrap();
            }
        }
        for &qb in &conjugated {
            circuit.push(Gate::x(qb)).unwrap();
        }
    }
    circuit
}

/// Walk a preparation circuit back into per-plane implicants. Returns None
/// when the gate sequence does not follow the H / I / conjugated-write
/// structure emitted by the encoder.
fn recover_bit_planes<T: Real>(
    circuit: &Circuit<T>,
    spec: &NeqrSpec,
) -> Option<Vec<Vec<Implicant>>> {
    if circuit.num_qubits() != spec.total_qubits() {
        return None;
    }
    let pos_base = spec.q;
    let pos_bits = spec.position_bits();
    let mut planes: Vec<Vec<Implicant>> = vec![Vec::new(); spec.q];
    let mut toggled: u32 = 0;
    for gate in circuit.gates() {
        match gate.kind() {
            GateKind::H => {
                let q = gate.targets()[0];
                if q < pos_base || toggled != 0 {
                    return None;
                }
            }
            GateKind::I => {}
            GateKind::X => {
                let q = gate.targets()[0];
                if q >= pos_base {
                    toggled ^= 1 << (q - pos_base);
                } else {
                    // bare write on a grayscale qubit: empty-mask cube
                    if toggled != 0 {
                        return None;
                    }
                    planes[q].push(Implicant { mask: 0, value: 0 });
                }
            }
            GateKind::Mcx => {
                let target = gate.targets()[0];
                if target >= spec.q {
                    return None;
                }
                let mut mask: u32 = 0;
                for &c in gate.controls() {
                    if c < pos_base || c >= pos_base + pos_bits {
                        return None;
                    }
                    mask |= 1 << (c - pos_base);
                }
                // controls fire on |1>; a toggled bit means the original
                // position bit is 0 there
                planes[target].push(Implicant {
                    mask,
                    value: !toggled & mask,
                });
            }
            _ => return None,
        }
    }
    if toggled != 0 {
        return None;
    }
    Some(planes)
}
