//! Width calculus for Morse presentations of links and tangles.
//!
//! A link in Morse position is a word of cups, caps and crossings read from
//! bottom to top ([`morse::MorseWord`]). This crate computes its width, thin
//! and thick levels and braid boxes, rewrites it by far commutation with
//! exact width deltas ([`moves`]), and checks the inequalities that a thin
//! sphere with a vertical compressing or cut disk must satisfy ([`cdisk`]),
//! returning a width-lowering certificate when they fail.
//!
//! ```
//! use widthlab::{dsl, morse, moves};
//!
//! let w = dsl::parse_word("link\ncup 0\ncup 2\ncap 0\ncap 0\n").unwrap();
//! assert_eq!(morse::width(&w), 8);
//! let thin = moves::exchange(&w, 2).unwrap();
//! assert_eq!(morse::width(&thin), 4);
//! ```

pub mod cdisk;
pub mod dsl;
pub mod morse;
pub mod moves;
pub mod presets;

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    pub mod intro {}
    #[doc = include_str!("../../../book/src/width.md")]
    pub mod width {}
    #[doc = include_str!("../../../book/src/boxes.md")]
    pub mod boxes {}
    #[doc = include_str!("../../../book/src/moves.md")]
    pub mod moves {}
    #[doc = include_str!("../../../book/src/cdisk.md")]
    pub mod cdisk {}
    #[doc = include_str!("../../../book/src/formats.md")]
    pub mod formats {}
}
