import init, { colexCurve, plateaus, solveGraph, sharpness } from "./pkg/hyperlag_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function showError(el, err) {
  el.textContent = String(err && err.message ? err.message : err);
  el.classList.add("error");
}

function drawCurve(values, segments) {
  const canvas = $("curve");
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = { l: 64, r: 16, t: 16, b: 36 };
  ctx.clearRect(0, 0, w, h);

  const m = values.length;
  const top = Math.max(...values) * 1.05 || 1;
  const x = (i) => pad.l + ((i - 1) / Math.max(m - 1, 1)) * (w - pad.l - pad.r);
  const y = (v) => h - pad.b - (v / top) * (h - pad.t - pad.b);

  ctx.strokeStyle = "#888";
  ctx.fillStyle = "#444";
  ctx.font = "12px system-ui";
  ctx.beginPath();
  ctx.moveTo(pad.l, pad.t);
  ctx.lineTo(pad.l, h - pad.b);
  ctx.lineTo(w - pad.r, h - pad.b);
  ctx.stroke();
  for (let k = 0; k <= 4; k++) {
    const v = (top * k) / 4;
    ctx.fillText(v.toFixed(4), 4, y(v) + 4);
  }
  for (const i of [1, Math.ceil(m / 2), m]) ctx.fillText(`m=${i}`, x(i) - 12, h - 12);

  ctx.setLineDash([5, 4]);
  ctx.strokeStyle = "#c05";
  for (let k = 0; k + 2 < segments.length; k += 3) {
    const [lo, hi, v] = segments.slice(k, k + 3);
    ctx.beginPath();
    ctx.moveTo(x(lo), y(v));
    ctx.lineTo(x(Math.max(hi, lo + 0.3)), y(v));
    ctx.stroke();
  }
  ctx.setLineDash([]);

  ctx.strokeStyle = "#0366d6";
  ctx.fillStyle = "#0366d6";
  ctx.beginPath();
  values.forEach((v, i) => (i === 0 ? ctx.moveTo(x(1), y(v)) : ctx.lineTo(x(i + 1), y(v))));
  ctx.stroke();
  values.forEach((v, i) => ctx.fillRect(x(i + 1) - 2, y(v) - 2, 4, 4));
}

function runCurve() {
  const status = $("curve-status");
  status.classList.remove("error");
  status.textContent = "solving…";
  // let the status paint before the synchronous solve
  setTimeout(() => {
    try {
      const r = num("curve-r");
      const m = num("curve-m");
      const started = performance.now();
      const values = Array.from(colexCurve(r, m, num("curve-restarts")));
      const segments = Array.from(plateaus(r, m));
      drawCurve(values, segments);
      status.textContent = `${m} graphs solved in ${((performance.now() - started) / 1000).toFixed(2)} s`;
    } catch (err) {
      showError(status, err);
    }
  }, 10);
}

function runSolve() {
  const out = $("solve-output");
  out.classList.remove("error");
  try {
    const report = JSON.parse(solveGraph($("solve-input").value, num("solve-restarts"), BigInt(num("solve-seed"))));
    out.textContent = JSON.stringify(report, null, 2);
  } catch (err) {
    showError(out, err);
  }
}

function runSharpness() {
  const out = $("sharp-output");
  out.classList.remove("error");
  try {
    const v = JSON.parse(sharpness(num("sharp-r"), num("sharp-t")));
    out.textContent =
      `m = ${v.m}\nweights   ${v.weighting.map((w) => w.toPrecision(6)).join(" ")}\n` +
      `value     ${v.value}\nreference ${v.reference}\nmargin    ${v.margin}`;
  } catch (err) {
    showError(out, err);
  }
}

await init();
$("curve-run").addEventListener("click", runCurve);
$("solve-run").addEventListener("click", runSolve);
$("sharp-run").addEventListener("click", runSharpness);
runCurve();
