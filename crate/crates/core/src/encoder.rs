//! Linear-time accumulator encoder. The circulant `C` turns the syndrome
//! equation into the chain x_{i-1} ⊕ x_i = s_i, which is solvable iff
//! s = M·message has even weight; the free bit is fixed to x_0 = 0.

use crate::code::{BitVector, StructuredCode};
use crate::gf2::DenseGf2;
use crate::{Error, Result};

fn m_syndrome(code: &StructuredCode, message: &BitVector) -> Result<BitVector> {
    let width = code.params.n - code.params.m;
    if message.len() != width {
        return Err(Error::LengthMismatch {
            expected: width,
            got: message.len(),
        });
    }
    let mut s = BitVector::zeros(code.params.m);
    for j in 0..width {
        if message.get(j) {
            for &i in code.m_matrix.col(j) {
                s.flip(i);
            }
        }
    }
    Ok(s)
}

/// True iff no C-part exists for this message (M·message has odd weight).
pub fn parity_obstruction(code: &StructuredCode, message: &BitVector) -> Result<bool> {
    Ok(m_syndrome(code, message)?.weight() % 2 == 1)
}

/// Encodes a message into a codeword whose M-part equals the message.
/// Runs in time linear in n plus the entry count of M.
pub fn encode(code: &StructuredCode, message: &BitVector) -> Result<BitVector> {
    let (n, m) = (code.params.n, code.params.m);
    let s = m_syndrome(code, message)?;
    if s.weight() % 2 == 1 {
        return Err(Error::ParityObstruction);
    }
    let mut word = BitVector::zeros(n);
    // x_0 = 0, then x_i = x_{i-1} ⊕ s_i; row 0 closes by the even-weight check.
    let mut x = false;
    for i in 1..m {
        x ^= s.get(i);
        word.set(i, x);
    }
    for j in 0..message.len() {
        word.set(m + j, message.get(j));
    }
    Ok(word)
}

/// n − rank(H), by dense elimination. Test oracle, not a performance path.
pub fn code_dimension(code: &StructuredCode) -> usize {
    code.params.n - DenseGf2::from_code(code).rank()
}
