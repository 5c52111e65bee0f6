//! Reads JSON element files and runs a computation in whatever ring they
//! name, without knowing the ring at compile time.

use bccore::dynamic::{with_ring, Codec, ElementFile, RingVisitor};
use bccore::ginverse::moore_penrose;

struct Mp(ElementFile);

impl RingVisitor for Mp {
    type Output = bccore::Result<String>;
    fn visit<R: Codec>(self, r: &R) -> bccore::Result<String> {
        let a = self.0.element(r)?;
        Ok(match moore_penrose(r, &a) {
            Some(x) => serde_json::to_string(&ElementFile::new(r, &x))?,
            None => format!("{} has no Moore-Penrose inverse", r.show(&a)),
        })
    }
}

fn main() -> bccore::Result<()> {
    let files = [
        r#"{"ring":{"kind":"zn","modulus":6},"payload":4}"#,
        r#"{"ring":{"kind":"zn","modulus":4},"payload":2}"#,
        r#"{"ring":{"kind":"matrix-ring","field":"rationals","n":2,"involution":"transpose"},"payload":[["1","2"],["2","4"]]}"#,
    ];
    for text in files {
        let file = ElementFile::parse(text)?;
        let ring = file.ring.clone();
        println!("{ring}: {}", with_ring(&ring, Mp(file))??);
    }
    Ok(())
}
