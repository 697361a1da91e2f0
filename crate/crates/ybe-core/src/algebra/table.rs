use super::{AlgebraError, MAX_ORDER};

/// A binary operation on `0..order` stored as a flat row-major table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpTable {
    order: usize,
    data: Vec<usize>,
}

impl OpTable {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, AlgebraError> {
        let order = rows.len();
        if order == 0 {
            return Err(AlgebraError::TableShape);
        }
        if order > MAX_ORDER {
            return Err(AlgebraError::OrderTooLarge(order));
        }
        let mut data = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(AlgebraError::TableShape);
            }
            for &value in row {
                if value >= order {
                    return Err(AlgebraError::EntryRange { value, order });
                }
                data.push(value);
            }
        }
        Ok(OpTable { order, data })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self, AlgebraError> {
        if order == 0 {
            return Err(AlgebraError::TableShape);
        }
        if order > MAX_ORDER {
            return Err(AlgebraError::OrderTooLarge(order));
        }
        let mut data = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let value = f(a, b);
                if value >= order {
                    return Err(AlgebraError::EntryRange { value, order });
                }
                data.push(value);
            }
        }
        Ok(OpTable { order, data })
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.data[a * self.order + b]
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.data[a * self.order..(a + 1) * self.order].to_vec())
            .collect()
    }
}
