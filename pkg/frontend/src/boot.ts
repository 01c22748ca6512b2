import { bootstrap } from "./main.js";

bootstrap();
