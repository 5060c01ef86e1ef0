use std::marker::PhantomData;

use super::matrix::Matrix;
use super::step::OutputRows;

/// Row access to a matrix shared between training threads without locks.
///
/// Hogwild-style asynchronous SGD: each thread updates a handful of rows
/// per step, so concurrent writes to the same row are rare and the lost
/// updates they cause are tolerated. Within one thread the trainer never
/// holds two borrows of the same row at once.
#[derive(Clone, Copy)]
pub(crate) struct SharedRows<'a> {
    ptr: *mut f32,
    rows: usize,
    cols: usize,
    _matrix: PhantomData<&'a mut Matrix<f32>>,
}

unsafe impl Send for SharedRows<'_> {}
unsafe impl Sync for SharedRows<'_> {}

impl<'a> SharedRows<'a> {
    pub(crate) fn new(matrix: &'a mut Matrix<f32>) -> Self {
        SharedRows {
            ptr: matrix.as_mut_slice().as_mut_ptr(),
            rows: matrix.rows(),
            cols: matrix.cols(),
            _matrix: PhantomData,
        }
    }

    /// # Safety
    ///
    /// The caller must not hold another reference to row `idx` in the same
    /// thread while the returned slice is alive.
    #[inline]
    pub(crate) unsafe fn row<'b>(&self, idx: usize) -> &'b mut [f32] {
        assert!(idx < self.rows);
        std::slice::from_raw_parts_mut(self.ptr.add(idx * self.cols), self.cols)
    }
}

impl OutputRows<f32> for SharedRows<'_> {
    #[inline]
    fn row_mut(&mut self, idx: usize) -> &mut [f32] {
        // The returned borrow is tied to `&mut self`, so a thread cannot
        // obtain two rows from the same handle simultaneously.
        unsafe { self.row(idx) }
    }
}
