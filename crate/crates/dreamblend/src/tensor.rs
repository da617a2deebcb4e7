//! Dense row-major tensor value type.
//!
//! This is the plain value half of the engine: parameters, images, latents
//! and attention maps are all `Tensor<f32>`. Differentiation lives on the
//! [`Tape`](crate::tape::Tape), which stores `Tensor` values per node.

use crate::scalar::Scalar;

#[derive(Clone, PartialEq)]
pub struct Tensor<S: Scalar = f32> {
    shape: Vec<usize>,
    data: Vec<S>,
}

impl<S: Scalar> std::fmt::Debug for Tensor<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tensor{:?}", self.shape)?;
        if self.data.len() <= 8 {
            write!(f, " {:?}", self.data)
        } else {
            write!(f, " [{}, {}, ...]", self.data[0], self.data[1])
        }
    }
}

impl<S: Scalar> Tensor<S> {
    /// Builds a tensor from a flat row-major buffer. Panics when the element
    /// count does not match the shape product.
    pub fn from_vec(shape: Vec<usize>, data: Vec<S>) -> Self {
        let numel: usize = shape.iter().product();
        assert_eq!(
            data.len(),
            numel,
            "tensor data length {} does not match shape {:?}",
            data.len(),
            shape
        );
        Tensor { shape, data }
    }

    pub fn zeros(shape: Vec<usize>) -> Self {
        let numel: usize = shape.iter().product();
        Tensor {
            shape,
            data: vec![S::ZERO; numel],
        }
    }

    pub fn filled(shape: Vec<usize>, value: S) -> Self {
        let numel: usize = shape.iter().product();
        Tensor {
            shape,
            data: vec![value; numel],
        }
    }

    pub fn scalar(value: S) -> Self {
        Tensor {
            shape: vec![],
            data: vec![value],
        }
    }

    pub fn from_fn(shape: Vec<usize>, mut f: impl FnMut(usize) -> S) -> Self {
        let numel: usize = shape.iter().product();
        Tensor {
            shape,
            data: (0..numel).map(|i| f(i)).collect(),
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [S] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<S> {
        self.data
    }

    /// Scalar extraction; panics unless the tensor holds exactly one element.
    pub fn item(&self) -> S {
        assert_eq!(self.data.len(), 1, "item() on non-scalar tensor");
        self.data[0]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Same buffer under a new shape with equal element count.
    pub fn reshaped(&self, shape: Vec<usize>) -> Self {
        Tensor::from_vec(shape, self.data.clone())
    }

    pub fn map(&self, f: impl Fn(S) -> S) -> Self {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn zip_map(&self, other: &Self, f: impl Fn(S, S) -> S) -> Self {
        assert_eq!(self.shape, other.shape, "zip_map shape mismatch");
        Tensor {
            shape: self.shape.clone(),
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// self + k * other, elementwise.
    pub fn axpy(&self, k: S, other: &Self) -> Self {
        self.zip_map(other, |a, b| b.mul_add(k, a))
    }

    pub fn scale(&self, k: S) -> Self {
        self.map(|v| v * k)
    }

    pub fn clamp01(&self) -> Self {
        self.map(|v| v.max(S::ZERO).min(S::ONE))
    }

    pub fn mean(&self) -> S {
        let mut acc = S::ZERO;
        for &v in &self.data {
            acc += v;
        }
        acc / S::from_f64(self.data.len() as f64)
    }

    pub fn cast<T: Scalar>(&self) -> Tensor<T> {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(|&v| T::from_f64(v.to_f64())).collect(),
        }
    }
}

impl Tensor<f32> {
    /// Root-mean-square distance between two same-shape tensors.
    pub fn rms_distance(&self, other: &Self) -> f32 {
        assert_eq!(self.shape, other.shape, "rms_distance shape mismatch");
        let mut acc = 0.0f64;
        for (&a, &b) in self.data.iter().zip(other.data.iter()) {
            let d = (a - b) as f64;
            acc += d * d;
        }
        (acc / self.data.len() as f64).sqrt() as f32
    }

    /// Bitwise equality, distinguishing e.g. -0.0 from 0.0.
    pub fn bit_eq(&self, other: &Self) -> bool {
        self.shape == other.shape
            && self
                .data
                .iter()
                .zip(other.data.iter())
                .all(|(a, b)| a.to_bits() == b.to_bits())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_data_contract() {
        let t = Tensor::<f32>::from_vec(vec![2, 3], vec![0.0; 6]);
        assert_eq!(t.numel(), 6);
        assert_eq!(t.shape(), &[2, 3]);
    }

    #[test]
    #[should_panic]
    fn mismatched_shape_panics() {
        let _ = Tensor::<f32>::from_vec(vec![2, 3], vec![0.0; 5]);
    }

    #[test]
    fn axpy_matches_formula() {
        let a = Tensor::from_vec(vec![3], vec![1.0f32, 2.0, 3.0]);
        let b = Tensor::from_vec(vec![3], vec![10.0f32, 20.0, 30.0]);
        let c = a.axpy(0.5, &b);
        assert_eq!(c.data(), &[6.0, 12.0, 18.0]);
    }

    #[test]
    fn rms_distance_constant_offset() {
        let a = Tensor::filled(vec![4, 4], 0.2f32);
        let b = Tensor::filled(vec![4, 4], 0.3f32);
        assert!((a.rms_distance(&b) - 0.1).abs() < 1e-6);
    }
}
