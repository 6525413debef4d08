//! The family `J_δ` on `𝔲(2)`: every member is integrable, carries an l.c.K.
//! form and is Vaisman. The Lee form has unit length only for some `δ`; the
//! Reeb decomposition reports the rescaling it needed.

use lck_lab::catalog::build;
use lck_lab::hermitian::{check_lck, format_vector};
use lck_lab::CatalogKey;

fn main() -> Result<(), lck_lab::Error> {
    for (c, d) in [("1", "0"), ("2", "1"), ("-1", "1/2"), ("1/3", "-4")] {
        for sign in ["+", "-"] {
            let key: CatalogKey = format!("u2_Jdelta({c},{d},{sign})").parse()?;
            let e = build(&key)?;
            let labels = e.algebra.labels();
            let r = check_lck(
                &e.algebra,
                e.omega.as_ref().unwrap(),
                e.theta.as_ref().unwrap(),
                e.j.as_ref().unwrap().matrix(),
            )?;
            let reeb = match &r.reeb {
                Some(Ok(reeb)) => format!(
                    "η = {}, |θ|² = {}",
                    format_vector(labels, &reeb.eta),
                    reeb.scale
                ),
                Some(Err(msg)) => msg.clone(),
                None => "-".into(),
            };
            println!(
                "{:<22} pass {} vaisman {:?}  {reeb}",
                key.to_string(),
                r.pass(),
                r.vaisman
            );
        }
    }
    Ok(())
}
