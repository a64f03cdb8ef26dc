//! Bit-packed linear algebra over GF(2).

/// Dense bit vector with a fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in idx {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_with(&mut self, o: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&o.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    fn concat(&self, o: &BitVec) -> BitVec {
        BitVec::from_indices(self.len + o.len, self.ones().chain(o.ones().map(|i| i + self.len)))
    }

    fn split(&self, at: usize) -> (BitVec, BitVec) {
        let a = BitVec::from_indices(at, self.ones().filter(|&i| i < at));
        let b = BitVec::from_indices(self.len - at, self.ones().filter(|&i| i >= at).map(|i| i - at));
        (a, b)
    }
}

/// Incremental echelon basis: rows are kept with distinct pivots.
#[derive(Clone, Debug)]
pub struct Echelon {
    len: usize,
    rows: Vec<(usize, BitVec)>,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Echelon { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis in place.
    pub fn reduce(&self, v: &mut BitVec) {
        for (p, r) in &self.rows {
            if v.get(*p) {
                v.xor_with(r);
            }
        }
    }

    /// Insert `v`; returns true if it was independent.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        assert_eq!(v.len(), self.len);
        self.reduce(&mut v);
        match v.first_one() {
            None => false,
            Some(p) => {
                for (_, r) in self.rows.iter_mut() {
                    if r.get(p) {
                        r.xor_with(&v);
                    }
                }
                self.rows.push((p, v));
                true
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }
}

pub fn rank(vectors: &[BitVec], len: usize) -> usize {
    let mut e = Echelon::new(len);
    for v in vectors {
        e.insert(v.clone());
    }
    e.rank()
}

/// Kernel of the linear map sending source basis vector `i` to `images[i]`.
pub fn kernel(images: &[BitVec], target_len: usize) -> Vec<BitVec> {
    let n = images.len();
    let mut e = Echelon::new(target_len + n);
    let mut out = Vec::new();
    for (i, img) in images.iter().enumerate() {
        let mut v = img.concat(&BitVec::from_indices(n, [i]));
        e.reduce(&mut v);
        match v.first_one() {
            Some(p) if p < target_len => {
                e.insert(v);
            }
            Some(_) => out.push(v.split(target_len).1),
            None => unreachable!("augmented vector cannot vanish"),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let v = |idx: &[usize]| BitVec::from_indices(3, idx.iter().copied());
        let images = vec![v(&[0, 1]), v(&[1, 2]), v(&[0, 2]), v(&[])];
        assert_eq!(rank(&images, 3), 2);
        let k = kernel(&images, 3);
        assert_eq!(k.len(), 2);
        for kv in &k {
            let mut s = BitVec::zeros(3);
            for i in kv.ones() {
                s.xor_with(&images[i]);
            }
            assert!(s.is_zero());
        }
    }
}
