//! Dense row-major f32 tensor.

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f32>,
}

impl Tensor {
    pub fn zeros(shape: &[usize]) -> Self {
        let len = shape.iter().product();
        Tensor {
            shape: shape.to_vec(),
            data: vec![0.0; len],
        }
    }

    pub fn from_vec(shape: &[usize], data: Vec<f32>) -> Result<Self> {
        let len: usize = shape.iter().product();
        if len != data.len() {
            return Err(Error::shape(
                "Tensor::from_vec",
                format!("{} elements for shape {:?}", len, shape),
                format!("{} elements", data.len()),
            ));
        }
        Ok(Tensor {
            shape: shape.to_vec(),
            data,
        })
    }

    /// Single row vector `[d]`.
    pub fn row_vec(data: Vec<f32>) -> Self {
        Tensor {
            shape: vec![data.len()],
            data,
        }
    }

    /// Matrix `[n, d]` from `n * d` values.
    pub fn matrix(n: usize, d: usize, data: Vec<f32>) -> Result<Self> {
        Tensor::from_vec(&[n, d], data)
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f32] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<f32> {
        self.data
    }

    /// Rows of a `[n, d]` matrix; a 1-D tensor is one row.
    pub fn n_rows(&self) -> usize {
        match self.shape.len() {
            1 => 1,
            2 => self.shape[0],
            _ => panic!("n_rows on tensor of rank {}", self.shape.len()),
        }
    }

    pub fn n_cols(&self) -> usize {
        match self.shape.len() {
            1 => self.shape[0],
            2 => self.shape[1],
            _ => panic!("n_cols on tensor of rank {}", self.shape.len()),
        }
    }

    pub fn row(&self, i: usize) -> &[f32] {
        let d = self.n_cols();
        &self.data[i * d..(i + 1) * d]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [f32] {
        let d = self.n_cols();
        &mut self.data[i * d..(i + 1) * d]
    }

    pub fn rows(&self) -> std::slice::Chunks<'_, f32> {
        self.data.chunks(self.n_cols().max(1))
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Index of the first non-finite entry, if any.
    pub fn first_non_finite(&self) -> Option<usize> {
        self.data.iter().position(|v| !v.is_finite())
    }

    pub fn check_finite(&self, context: &str) -> Result<()> {
        match self.first_non_finite() {
            None => Ok(()),
            Some(i) => Err(Error::non_finite(context, Some(i))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_vec_validates_length() {
        assert!(Tensor::from_vec(&[2, 3], vec![0.0; 6]).is_ok());
        assert!(Tensor::from_vec(&[2, 3], vec![0.0; 5]).is_err());
    }

    #[test]
    fn row_access() {
        let t = Tensor::matrix(2, 3, vec![1., 2., 3., 4., 5., 6.]).unwrap();
        assert_eq!(t.row(0), &[1., 2., 3.]);
        assert_eq!(t.row(1), &[4., 5., 6.]);
        assert_eq!(t.n_rows(), 2);
    }

    #[test]
    fn finite_checks() {
        let mut t = Tensor::zeros(&[4]);
        assert!(t.check_finite("x").is_ok());
        t.data_mut()[2] = f32::NAN;
        assert_eq!(t.first_non_finite(), Some(2));
    }
}
