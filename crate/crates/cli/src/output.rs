//! CSV emission and plot-script generation. Output is deterministic: the
//! same rows always yield the same bytes, with LF line endings and reals at
//! 12 significant digits.

use std::io::Write;

use crate::config::{Axis, FigureId};
use crate::sweep::ResultRow;
use crate::{CliError, Result};

/// Render a real with 12 significant digits in the shortest form that still
/// round-trips: `1` stays `1`, `0.04` stays `0.04`, irrational values get
/// twelve digits.
pub fn format_real(x: f64) -> String {
    debug_assert!(x.is_finite());
    if x == 0.0 {
        return "0".to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("round-trip format");
    format!("{rounded}")
}

fn format_optional(x: Option<f64>) -> String {
    x.map(format_real).unwrap_or_default()
}

/// Write the sweep rows as CSV. Rows must be non-empty and strictly ordered
/// by axis value; absent fields render as empty columns.
pub fn emit_csv<W: Write>(rows: &[ResultRow], writer: &mut W) -> Result<()> {
    if rows.is_empty() {
        return Err(CliError::Config("no rows to emit".into()));
    }
    for pair in rows.windows(2) {
        if pair[1].axis_value <= pair[0].axis_value {
            return Err(CliError::Config(format!(
                "rows out of order: axis value {} follows {}",
                pair[1].axis_value, pair[0].axis_value
            )));
        }
    }
    writer.write_all(b"axis,n_initial,n_damped,n_protected,ratio,success_probability\n")?;
    for row in rows {
        writeln!(
            writer,
            "{},{},{},{},{},{}",
            format_real(row.axis_value),
            format_real(row.n_initial),
            format_real(row.n_damped),
            format_optional(row.n_protected),
            format_optional(row.ratio),
            format_real(row.success_probability),
        )?;
    }
    Ok(())
}

/// Column indices and legend labels plotted for each figure.
fn figure_series(figure: FigureId) -> &'static [(usize, &'static str)] {
    match figure {
        FigureId::Fig2a | FigureId::Fig2b | FigureId::Fig4a => &[(3, "N_d"), (4, "N_r")],
        FigureId::Fig3a => &[(3, "N_d")],
        FigureId::Fig3b => &[(5, "N_wr / N_i")],
        FigureId::Fig4b => &[(4, "N_wr")],
    }
}

fn figure_ylabel(figure: FigureId) -> &'static str {
    match figure {
        FigureId::Fig3b => "N_wr / N_i",
        _ => "Negativity",
    }
}

/// Write a gnuplot script that plots `csv_name` with the series and axis
/// labels of the requested figure. The rows' axis must match the figure's.
pub fn emit_plot_script<W: Write>(
    figure: FigureId,
    axis: Axis,
    rows: &[ResultRow],
    csv_name: &str,
    writer: &mut W,
) -> Result<()> {
    if figure.expected_axis() != axis {
        return Err(CliError::Config(format!(
            "figure {} expects axis \"{}\", rows were swept over \"{}\"",
            figure.name(),
            figure.expected_axis().label(),
            axis.label()
        )));
    }
    if rows.is_empty() {
        return Err(CliError::Config("no rows to plot".into()));
    }

    writeln!(writer, "# {}: generated plot script", figure.name())?;
    writeln!(writer, "set datafile separator ','")?;
    writeln!(writer, "set xlabel '{}'", axis.label())?;
    writeln!(writer, "set ylabel '{}'", figure_ylabel(figure))?;
    writeln!(writer, "set key top right")?;
    writeln!(writer, "set grid")?;
    let series = figure_series(figure);
    let mut parts = Vec::new();
    for (column, title) in series {
        parts.push(format!(
            "'{csv_name}' skip 1 using 1:{column} with lines lw 2 title '{title}'"
        ));
    }
    writeln!(writer, "plot {}", parts.join(", \\\n     "))?;
    Ok(())
}
