//! Fixed-width bit vector with the shifted-OR used by the sumset DPs.

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn set(&mut self, idx: usize) {
        assert!(idx < self.len, "bit {idx} out of range {}", self.len);
        self.words[idx / WORD] |= 1 << (idx % WORD);
    }

    #[inline]
    pub fn test(&self, idx: usize) -> bool {
        idx < self.len && self.words[idx / WORD] >> (idx % WORD) & 1 == 1
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn any(&self) -> bool {
        self.words.iter().any(|&w| w != 0)
    }

    /// `self[i] |= src[i - shift]` for every `i` where both sides are in range.
    /// `src` must have the same length as `self`.
    pub fn or_shifted(&mut self, src: &BitVec, shift: isize) {
        debug_assert_eq!(self.len, src.len);
        let n = self.words.len();
        if shift >= 0 {
            let s = shift as usize;
            let (ws, bs) = (s / WORD, s % WORD);
            if ws >= n {
                return;
            }
            for i in (ws..n).rev() {
                let j = i - ws;
                let mut v = src.words[j] << bs;
                if bs > 0 && j > 0 {
                    v |= src.words[j - 1] >> (WORD - bs);
                }
                self.words[i] |= v;
            }
        } else {
            let s = shift.unsigned_abs();
            let (ws, bs) = (s / WORD, s % WORD);
            if ws >= n {
                return;
            }
            for i in 0..n - ws {
                let j = i + ws;
                let mut v = src.words[j] >> bs;
                if bs > 0 && j + 1 < n {
                    v |= src.words[j + 1] << (WORD - bs);
                }
                self.words[i] |= v;
            }
        }
        self.clear_tail();
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            })
        })
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}
