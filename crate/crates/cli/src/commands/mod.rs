mod em;
mod gas;
mod model;
mod spectral;

use crate::args::{Command, ModelCommand};
use crate::emit::Report;

pub fn dispatch(c: &Command) -> anyhow::Result<Report> {
    match c {
        Command::Spectrum(a) => spectral::spectrum(a),
        Command::Compare(a) => spectral::compare_laws(a),
        Command::Stefan(a) => spectral::stefan(a),
        Command::Peak(a) => spectral::peak(a),
        Command::Compose(a) => spectral::compose(a),
        Command::Mc(a) => gas::mc(a),
        Command::FieldsCheck(a) => em::fields_check(a),
        Command::TensorCheck(a) => em::tensor_check(a),
        Command::MultipoleRatio(a) => em::multipole_ratio(a),
        Command::Model(m) => match &m.command {
            ModelCommand::Split(a) => model::split(a),
            ModelCommand::Period(a) => model::period(a),
            ModelCommand::Flux(a) => model::flux(a),
            ModelCommand::Ensemble(a) => model::ensemble(a),
        },
    }
}
