use crate::error::{Error, Result};
use crate::lattice::Point;

/// A finite integer box `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    lo: Point,
    hi: Point,
}

impl Window {
    pub fn new(lo: Point, hi: Point) -> Result<Self> {
        hi.check_dim(lo.dim())?;
        if lo.dim() == 0 {
            return Err(Error::InvalidWindow("dimension must be at least 1".into()));
        }
        if !lo.le(&hi) {
            return Err(Error::InvalidWindow(format!("lo {lo} not <= hi {hi}")));
        }
        Ok(Window { lo, hi })
    }

    /// The cube `[lo, hi]^dim`.
    pub fn cube(dim: usize, lo: i64, hi: i64) -> Result<Self> {
        Window::new(Point::new(vec![lo; dim]), Point::new(vec![hi; dim]))
    }

    pub fn dim(&self) -> usize {
        self.lo.dim()
    }

    pub fn lo(&self) -> &Point {
        &self.lo
    }

    pub fn hi(&self) -> &Point {
        &self.hi
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.dim() && self.lo.le(p) && p.le(&self.hi)
    }

    /// Number of lattice points.
    pub fn len(&self) -> u128 {
        (0..self.dim())
            .map(|i| (self.hi[i] - self.lo[i] + 1) as u128)
            .product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Lattice points in lexicographic order.
    pub fn points(&self) -> BoxIter {
        BoxIter::new(self.lo.coords().to_vec(), self.hi.coords().to_vec())
    }

    /// Smallest window containing every point, widened by `margin`.
    pub fn hull<'a>(points: impl IntoIterator<Item = &'a Point>, margin: i64) -> Option<Window> {
        let mut it = points.into_iter();
        let first = it.next()?;
        let mut lo = first.coords().to_vec();
        let mut hi = lo.clone();
        for p in it {
            for i in 0..lo.len() {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        let lo = lo.into_iter().map(|v| v - margin).collect();
        let hi = hi.into_iter().map(|v| v + margin).collect();
        Some(Window {
            lo: Point::new(lo),
            hi: Point::new(hi),
        })
    }
}

/// Lexicographic enumeration of an integer box.
pub struct BoxIter {
    lo: Vec<i64>,
    hi: Vec<i64>,
    next: Option<Vec<i64>>,
}

impl BoxIter {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        let next = if lo.iter().zip(&hi).all(|(a, b)| a <= b) {
            Some(lo.clone())
        } else {
            None
        };
        BoxIter { lo, hi, next }
    }
}

impl Iterator for BoxIter {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut k = succ.len();
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            if succ[k] < self.hi[k] {
                succ[k] += 1;
                self.next = Some(succ);
                break;
            }
            succ[k] = self.lo[k];
        }
        Some(Point::new(cur))
    }
}
