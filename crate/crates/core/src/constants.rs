//! Fundamental constants π, γ and ln(2π).
//!
//! Each is stored as a 1200-significant-digit literal (about 3980 bits).
//! Requests beyond the literal's reach are served by MPFR's own constant
//! routines.

use std::sync::OnceLock;

use rug::float::Constant;
use rug::Float;

use crate::BigReal;

const PI_DIGITS: &str = concat!(
    "3.1415926535897932384626433832795028841971693993751058209749445923078164",
    "062862089986280348253421170679821480865132823066470938446095505822317253",
    "594081284811174502841027019385211055596446229489549303819644288109756659",
    "334461284756482337867831652712019091456485669234603486104543266482133936",
    "072602491412737245870066063155881748815209209628292540917153643678925903",
    "600113305305488204665213841469519415116094330572703657595919530921861173",
    "819326117931051185480744623799627495673518857527248912279381830119491298",
    "336733624406566430860213949463952247371907021798609437027705392171762931",
    "767523846748184676694051320005681271452635608277857713427577896091736371",
    "787214684409012249534301465495853710507922796892589235420199561121290219",
    "608640344181598136297747713099605187072113499999983729780499510597317328",
    "160963185950244594553469083026425223082533446850352619311881710100031378",
    "387528865875332083814206171776691473035982534904287554687311595628638823",
    "537875937519577818577805321712268066130019278766111959092164201989380952",
    "572010654858632788659361533818279682303019520353018529689957736225994138",
    "912497217752834791315155748572424541506959508295331168617278558890750983",
    "81754637464939319255060400927701671139009848824012",
);

const EULER_GAMMA_DIGITS: &str = concat!(
    "0.5772156649015328606065120900824024310421593359399235988057672348848677",
    "267776646709369470632917467495146314472498070824809605040144865428362241",
    "739976449235362535003337429373377376739427925952582470949160087352039481",
    "656708532331517766115286211995015079847937450857057400299213547861466940",
    "296043254215190587755352673313992540129674205137541395491116851028079842",
    "348775872050384310939973613725530608893312676001724795378367592713515772",
    "261027349291394079843010341777177808815495706610750101619166334015227893",
    "586796549725203621287922655595366962817638879272680132431010476505963703",
    "947394957638906572967929601009015125195950922243501409349871228247949747",
    "195646976318506676129063811051824197444867836380861749455169892792301877",
    "391072945781554316005002182844096053772434203285478367015177394398700302",
    "370339518328690001558193988042707411542227819716523011073565833967348717",
    "650491941812300040654693142999297779569303100503086303418569803231083691",
    "640025892970890985486825777364288253954925873629596133298574739302373438",
    "847070370284412920166417850248733379080562754998434590761643167103146710",
    "722370021810745044418664759134803669025532458625442225345181387912434573",
    "50136129778227828814894590986384600629316947188714",
);

const LN_2PI_DIGITS: &str = concat!(
    "1.8378770664093454835606594728112352797227949472755668256343030809655313",
    "918545207953894865972719083952440112932492686748927337257636815871443117",
    "518304453627872071214850947173380927918119827616112603264697461892547492",
    "510365033899089548201917187027839632231962611480106953907721299179844624",
    "279113855486999422005670391966389850627885412925913729488231249524260974",
    "736305689987586887646607970258953093145638634759757061713788462725643079",
    "461672052950585309829800787111999992074126943705144047152430700687247592",
    "054316975009722719076849626583582485399922753679280302789575459100202066",
    "417683936712388159514332525411750507649724518605059042160990362403936104",
    "519600917610771497670658882278136156555534754445076266765187901482804052",
    "386787426337408944137118915686982655208159082601536796094035051774961877",
    "174911446465066877848938559655749937054225161751623317487505801769689661",
    "835077881525919088198969357960783242618144657028735729075124759420708690",
    "852634755752923440722283452753593767913238054014882609582282799976925761",
    "217812723574091548090088859200013721780671774949241617759590438569372865",
    "738534554510858290166156189544297285501617489057171251457966376452423264",
    "23421182783027527934577410107456623593982993146110",
);

/// Bits recoverable from the 1200-digit literals, less a safety margin.
pub const LITERAL_PRECISION_BITS: u32 = 3960;

fn literal(cell: &'static OnceLock<Float>, digits: &str) -> &'static Float {
    cell.get_or_init(|| {
        let parsed = Float::parse(digits).expect("constant literal is well formed");
        Float::with_val(LITERAL_PRECISION_BITS + 64, parsed)
    })
}

fn pi_full() -> &'static Float {
    static CELL: OnceLock<Float> = OnceLock::new();
    literal(&CELL, PI_DIGITS)
}

fn gamma_full() -> &'static Float {
    static CELL: OnceLock<Float> = OnceLock::new();
    literal(&CELL, EULER_GAMMA_DIGITS)
}

fn ln_2pi_full() -> &'static Float {
    static CELL: OnceLock<Float> = OnceLock::new();
    literal(&CELL, LN_2PI_DIGITS)
}

/// π at `prec` bits.
pub fn pi(prec: u32) -> BigReal {
    if prec <= LITERAL_PRECISION_BITS {
        BigReal::from_float(Float::with_val(prec, pi_full()))
    } else {
        BigReal::from_float(Float::with_val(prec, Constant::Pi))
    }
}

/// Euler–Mascheroni γ at `prec` bits.
pub fn euler_gamma(prec: u32) -> BigReal {
    if prec <= LITERAL_PRECISION_BITS {
        BigReal::from_float(Float::with_val(prec, gamma_full()))
    } else {
        BigReal::from_float(Float::with_val(prec, Constant::Euler))
    }
}

/// The stored ln(2π) literal rounded to `prec` bits.
pub fn ln_2pi_literal(prec: u32) -> BigReal {
    if prec <= LITERAL_PRECISION_BITS {
        BigReal::from_float(Float::with_val(prec, ln_2pi_full()))
    } else {
        ln_2pi_computed(prec)
    }
}

/// ln(π) + ln(2) recomputed at `prec` bits.
pub fn ln_2pi_computed(prec: u32) -> BigReal {
    let guard = prec + 16;
    let sum = pi(guard).ln() + BigReal::from_float(Float::with_val(guard, Constant::Log2));
    sum.with_precision(prec)
}

#[derive(Clone, Debug)]
pub struct FundamentalConstants {
    pub pi: BigReal,
    pub euler_gamma: BigReal,
    pub ln_2pi: BigReal,
}

impl FundamentalConstants {
    pub fn new(prec: u32) -> Self {
        FundamentalConstants {
            pi: pi(prec),
            euler_gamma: euler_gamma(prec),
            ln_2pi: ln_2pi_computed(prec),
        }
    }

    pub fn precision_bits(&self) -> u32 {
        self.pi.precision_bits()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_carry_at_least_a_thousand_digits() {
        for digits in [PI_DIGITS, EULER_GAMMA_DIGITS, LN_2PI_DIGITS] {
            assert!(digits.chars().filter(char::is_ascii_digit).count() >= 1000);
        }
    }

    #[test]
    fn literals_agree_with_mpfr() {
        let prec = LITERAL_PRECISION_BITS;
        let tol = Float::with_val(prec, Float::i_exp(1, -(prec as i32) + 2));
        let d = Float::with_val(prec, pi(prec).as_float() - Float::with_val(prec, Constant::Pi));
        assert!(d.abs() < tol);
        let d = Float::with_val(
            prec,
            euler_gamma(prec).as_float() - Float::with_val(prec, Constant::Euler),
        );
        assert!(d.abs() < tol);
    }

    #[test]
    fn ln_2pi_recomputation_within_one_ulp() {
        for prec in [64, 128, 256, 1024, 3000] {
            let lit = ln_2pi_literal(prec);
            let rec = ln_2pi_computed(prec);
            let diff = (&lit - &rec).abs();
            let ulp = BigReal::one(prec).mul_pow2(lit.exponent().unwrap() - prec as i32);
            assert!(diff <= ulp, "prec {prec}: {diff:?} > {ulp:?}");
        }
    }

    #[test]
    fn beyond_literal_falls_back_to_mpfr() {
        let p = pi(5000);
        assert_eq!(p.precision_bits(), 5000);
        let lit = pi(LITERAL_PRECISION_BITS);
        let gap = (p - lit).abs();
        assert!(gap.is_zero() || gap.exponent().unwrap() < -3900);
    }
}
