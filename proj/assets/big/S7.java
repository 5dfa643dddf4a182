class S7 extends Abstract17 {
  void enter() {
    new S100();
    try {
      new S59();
      send("msg2");
      log("note");
      switch (event) {
        case EV239:
          new S52();
          new S66();
          if (x7 > 0) {
            new S25();
            log("note");
            new State();
          } else {
            send("msg14");
            new Helper();
            send("msg18");
          }
          new S57();
          break;
        case EV240:
          switch (event) {
            case EV241:
              send("msg13");
              new S84();
              send("msg4");
              break;
            case EV242:
              new S71();
              break;
          }
          log("note");
          switch (event) {
            case EV243:
              new S68();
              new S91();
              new S32();
              new S87();
              break;
            case EV244:
              new S94();
              break;
          }
          try {
            send("msg1");
            new S25();
            new S28();
          } finally {
            new S82();
            new S13();
          }
          break;
      }
    } catch (IOException e) {
      new State();
      switch (event) {
        case EV245:
          log("note");
          new S66();
          new S21();
          break;
        case EV246:
          new S62();
          new S91();
          break;
        case EV247:
          if (x1 > 0) {
            new S21();
            new Helper();
          }
          switch (event) {
            case EV248:
              log("note");
              break;
            case EV249:
              new S84();
              send("msg14");
              new S41();
              break;
          }
          try {
            new S17();
            send("msg15");
          } catch (IllegalStateException e) {
            send("msg17");
            new S74();
          } finally {
            new S66();
            send("msg10");
          }
          new Helper();
          break;
      }
      new S56();
    } catch (IOException e) {
      new S78();
      switch (event) {
        case EV250:
          new S73();
          send("msg11");
          send("msg10");
          send("msg19");
          break;
        case EV251:
          send("msg8");
          send("msg4");
          new S28();
          break;
        case EV252:
          new S87();
          new Helper();
          switch (event) {
            case EV253:
              new Helper();
              break;
            case EV254:
              send("msg1");
              send("msg16");
              log("note");
              log("note");
              break;
          }
          new S14();
          break;
      }
      switch (event) {
        case EV255:
          try {
            send("msg6");
            send("msg0");
            send("msg4");
          } catch (IllegalStateException e) {
            new S83();
            log("note");
          } catch (TimeoutException e) {
            new S61();
            new State();
            send("msg5");
            send("msg0");
          }
          send("msg3");
          send("msg16");
          break;
        case EV256:
          new S44();
          send("msg16");
          new S72();
          switch (event) {
            case EV257:
              new S3();
              new S77();
              new State();
              send("msg3");
              break;
            case EV258:
              new S22();
              break;
          }
          break;
      }
    }
    log("note");
  }
  void exit() {
    send("msg18");
    try {
      if (x0 > 0) {
        if (x8 > 0) {
          send("msg9");
        }
      } else {
        if (x3 > 0) {
          send("msg5");
          new S61();
        }
      }
      new S1();
      try {
        if (x0 > 0) {
          log("note");
          send("msg4");
          send("msg4");
          new S85();
        }
        new S43();
        send("msg13");
        switch (event) {
          case EV259:
            new S100();
            new S5();
            new S79();
            new S97();
            break;
          case EV260:
            send("msg16");
            break;
        }
      } catch (IllegalStateException e) {
        switch (event) {
          case EV261:
            send("msg13");
            send("msg0");
            new S48();
            break;
          case EV262:
            new S44();
            send("msg2");
            new State();
            send("msg9");
            break;
        }
        new S20();
        new S33();
      }
      try {
        log("note");
        send("msg19");
        send("msg3");
      } finally {
        new S37();
        send("msg15");
        new S97();
      }
    } catch (IOException e) {
      new S36();
    }
    try {
      switch (event) {
        case EV263:
          new S39();
          break;
      }
      send("msg18");
      new S11();
    } finally {
      new State();
      new State();
      log("note");
    }
    if (x0 > 0) {
      new S52();
      try {
        switch (event) {
          case EV264:
            new S98();
            new S84();
            new S92();
            break;
          case EV265:
            log("note");
            new S11();
            break;
          case EV266:
            send("msg17");
            break;
        }
        send("msg9");
      } catch (IOException e) {
        if (x5 > 0) {
          new S16();
          send("msg16");
          new S64();
        }
        send("msg15");
      }
    } else {
      try {
        switch (event) {
          case EV267:
            log("note");
            new S37();
            break;
          case EV268:
            send("msg19");
            new S26();
            break;
          case EV269:
            new S18();
            send("msg15");
            new S1();
            break;
        }
        switch (event) {
          case EV270:
            new S66();
            send("msg15");
            break;
        }
      } catch (IllegalStateException e) {
        new State();
        new S19();
        new S9();
      }
      switch (event) {
        case EV271:
          try {
            send("msg7");
            send("msg13");
          } catch (IOException e) {
            new Helper();
          } catch (IllegalStateException e) {
            send("msg9");
          }
          if (x5 > 0) {
            send("msg18");
            send("msg16");
          }
          new S29();
          new S6();
          break;
      }
    }
  }
  public void handle() {
    if (x3 > 0) {
      new S70();
      new S17();
    } else {
      new S3();
      switch (event) {
        case EV272:
          new S87();
          switch (event) {
            case EV273:
              new S100();
              break;
            case EV274:
              new S15();
              break;
            case EV275:
              log("note");
              break;
          }
          new S12();
          break;
        case EV276:
          switch (event) {
            case EV277:
              send("msg8");
              send("msg16");
              break;
          }
          log("note");
          break;
      }
      send("msg15");
      try {
        new S23();
        new S77();
        new S8();
      } catch (TimeoutException e) {
        new S77();
        send("msg7");
      } catch (IllegalStateException e) {
        if (x5 > 0) {
          send("msg19");
        } else {
          send("msg4");
        }
        if (x9 > 0) {
          new S29();
          new S92();
          send("msg10");
        } else {
          new Helper();
          send("msg18");
        }
        send("msg7");
      }
    }
    new S97();
    new S49();
    log("note");
  }
  public void tick() {
    log("note");
    send("msg10");
  }
  public void reset() {
    new S6();
    new State();
  }
  void open() {
    send("msg14");
    new S84();
    new S57();
    try {
      switch (event) {
        case EV278:
          switch (event) {
            case EV279:
              send("msg4");
              break;
            case EV280:
              new S40();
              break;
          }
          break;
      }
      send("msg11");
    } finally {
      if (x3 > 0) {
        send("msg13");
      }
    }
  }
  public void close() {
    switch (event) {
      case EV281:
        new S41();
        new S86();
        send("msg1");
        new S83();
        break;
    }
    log("note");
    send("msg0");
    send("msg13");
  }
  void start() {
    new S64();
    if (x3 > 0) {
      switch (event) {
        case EV282:
          if (x6 > 0) {
            new S42();
            send("msg11");
          } else {
            new S37();
          }
          break;
      }
      new S86();
      try {
        switch (event) {
          case EV283:
            new S96();
            log("note");
            new S44();
            break;
          case EV284:
            send("msg14");
            send("msg17");
            break;
        }
        if (x1 > 0) {
          send("msg17");
          send("msg18");
          new S77();
        }
      } catch (IllegalStateException e) {
        new S26();
        new S15();
      } finally {
        new S64();
        new State();
        if (x8 > 0) {
          send("msg7");
          new S99();
          send("msg19");
          log("note");
        }
        log("note");
      }
    }
    if (x0 > 0) {
      send("msg2");
    } else {
      switch (event) {
        case EV285:
          if (x6 > 0) {
            send("msg19");
            new S39();
          } else {
            send("msg14");
          }
          break;
        case EV286:
          send("msg10");
          if (x9 > 0) {
            send("msg1");
          } else {
            new S29();
            send("msg17");
          }
          send("msg19");
          break;
      }
      new S97();
    }
  }
  void stop() {
    new S50();
    try {
      new S49();
      log("note");
      switch (event) {
        case EV287:
          if (x7 > 0) {
            new State();
            send("msg7");
            new S99();
          }
          new S18();
          new S49();
          break;
        case EV288:
          new S17();
          new S25();
          new S27();
          new S4();
          break;
        case EV289:
          switch (event) {
            case EV290:
              send("msg14");
              new S80();
              new S26();
              break;
            case EV291:
              send("msg13");
              send("msg1");
              log("note");
              break;
          }
          log("note");
          switch (event) {
            case EV292:
              new Helper();
              break;
            case EV293:
              send("msg18");
              new S1();
              new S58();
              new S56();
              break;
          }
          try {
            send("msg7");
            new S22();
            log("note");
            new S38();
          } finally {
            send("msg6");
          }
          break;
      }
    } catch (TimeoutException e) {
      if (x3 > 0) {
        new S64();
        if (x4 > 0) {
          new S97();
          new S54();
          log("note");
        }
        new S88();
        send("msg9");
      }
      new S93();
      new S84();
      send("msg19");
    }
    new S53();
    send("msg8");
  }
  void pause() {
    send("msg13");
  }
}
