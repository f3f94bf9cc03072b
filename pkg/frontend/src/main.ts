import { ExerciseApi } from "./api";
import { PracticeApp } from "./app";
import "./styles.css";

const root = document.getElementById("app");
if (root === null) {
  throw new Error("missing #app mount point");
}
void new PracticeApp(root, new ExerciseApi()).start();
