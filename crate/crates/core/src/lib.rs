pub mod cli;
pub mod error;
pub mod fiber;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod monomial;
pub mod multseq;
pub mod parse;
pub mod poly;
pub mod ring;
