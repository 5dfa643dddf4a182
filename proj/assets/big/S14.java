class S14 extends Abstract1 {
  void enter() {
    try {
      try {
        new S56();
        send("msg0");
        log("note");
        new S70();
      } catch (TimeoutException e) {
        try {
          new S20();
          send("msg9");
          send("msg14");
        } catch (IOException e) {
          send("msg2");
          new S46();
          send("msg1");
        } catch (IllegalStateException e) {
          new S50();
          new S5();
          send("msg9");
        }
        new State();
        log("note");
      } catch (IOException e) {
        send("msg7");
      }
      send("msg9");
      switch (event) {
        case EV467:
          log("note");
          new S31();
          try {
            send("msg18");
            new S40();
          } catch (IllegalStateException e) {
            new S65();
            new S35();
          } finally {
            new S18();
            send("msg10");
          }
          new S41();
          break;
        case EV468:
          try {
            log("note");
            new S32();
          } catch (TimeoutException e) {
            new S36();
          }
          new S96();
          try {
            send("msg17");
            new S48();
            log("note");
            send("msg18");
          } finally {
            new Helper();
            new Helper();
            new S41();
          }
          break;
      }
    } finally {
      new S70();
    }
    new S72();
    log("note");
  }
  void exit() {
    if (x3 > 0) {
      if (x1 > 0) {
        send("msg13");
        new S61();
      }
    }
    new S36();
    new S71();
  }
  void handle() {
    new S75();
    switch (event) {
      case EV469:
        new Helper();
        new S50();
        send("msg8");
        break;
    }
  }
  public void tick() {
    send("msg12");
    new S90();
  }
  public void reset() {
    send("msg4");
    log("note");
    try {
      new S26();
      new State();
    } catch (TimeoutException e) {
      send("msg15");
      if (x5 > 0) {
        try {
          log("note");
          new S32();
          new S92();
        } catch (IOException e) {
          new S51();
          new S64();
          new S86();
        }
      } else {
        new S50();
        new Helper();
        send("msg14");
      }
      send("msg7");
    }
  }
  void open() {
    send("msg2");
    send("msg18");
    try {
      new State();
      new State();
      send("msg17");
      send("msg12");
    } catch (IllegalStateException e) {
      try {
        send("msg3");
        send("msg2");
        new Helper();
      } catch (IOException e) {
        new S57();
      } catch (IOException e) {
        send("msg14");
        switch (event) {
          case EV470:
            new S70();
            new S58();
            new S82();
            break;
          case EV471:
            send("msg13");
            break;
          case EV472:
            new S31();
            new S3();
            break;
        }
      }
      try {
        send("msg13");
        if (x5 > 0) {
          new S34();
          send("msg19");
          new S20();
        }
      } catch (TimeoutException e) {
        try {
          send("msg13");
          send("msg1");
          send("msg13");
        } catch (IllegalStateException e) {
          log("note");
          new S60();
          new S36();
        } catch (IOException e) {
          new S23();
          new S55();
          new S7();
        }
      }
    } catch (IllegalStateException e) {
      if (x7 > 0) {
        switch (event) {
          case EV473:
            new S77();
            new S66();
            new Helper();
            break;
        }
      } else {
        try {
          new S20();
        } catch (TimeoutException e) {
          new State();
          new S56();
          new S15();
        }
      }
      send("msg6");
      switch (event) {
        case EV474:
          new S39();
          break;
      }
    }
    if (x8 > 0) {
      send("msg1");
    }
  }
  void close() {
    if (x7 > 0) {
      try {
        try {
          send("msg14");
          new S21();
          send("msg2");
        } catch (IOException e) {
          log("note");
        } catch (IllegalStateException e) {
          new S35();
          log("note");
        }
        send("msg3");
        new S30();
      } catch (IllegalStateException e) {
        try {
          log("note");
          send("msg4");
          new S72();
        } finally {
          new S10();
          new S56();
          new S36();
          send("msg12");
        }
        send("msg3");
        switch (event) {
          case EV475:
            send("msg15");
            send("msg17");
            send("msg12");
            new S97();
            break;
          case EV476:
            send("msg13");
            break;
        }
        new S27();
      } catch (IOException e) {
        try {
          send("msg3");
          new S20();
          send("msg3");
        } catch (IllegalStateException e) {
          new State();
          new S74();
        }
      }
      try {
        try {
          new S49();
          new S61();
          send("msg12");
          new S27();
        } finally {
          new S86();
          new S79();
          send("msg16");
        }
      } catch (IllegalStateException e) {
        new S69();
        send("msg19");
        new S55();
      }
      try {
        send("msg16");
        log("note");
      } catch (IllegalStateException e) {
        new S20();
        switch (event) {
          case EV477:
            new S38();
            new S35();
            send("msg0");
            break;
          case EV478:
            new S34();
            send("msg0");
            break;
        }
        new S15();
        new S61();
      } catch (TimeoutException e) {
        switch (event) {
          case EV479:
            new Helper();
            break;
          case EV480:
            send("msg9");
            send("msg10");
            send("msg9");
            break;
          case EV481:
            new S88();
            break;
        }
        send("msg13");
      }
      new S82();
    } else {
      send("msg5");
    }
  }
  void start() {
    send("msg2");
    new S27();
    if (x2 > 0) {
      new S81();
    }
    send("msg16");
  }
  void stop() {
    send("msg13");
    if (x2 > 0) {
      switch (event) {
        case EV482:
          if (x3 > 0) {
            new S15();
          }
          switch (event) {
            case EV483:
              new S32();
              new S23();
              send("msg4");
              send("msg0");
              break;
            case EV484:
              send("msg2");
              log("note");
              send("msg10");
              break;
          }
          new S41();
          new S46();
          break;
      }
      new S48();
      new S86();
      new S22();
    }
    try {
      send("msg15");
    } catch (TimeoutException e) {
      send("msg3");
      try {
        if (x2 > 0) {
          log("note");
          new S42();
          new S53();
          send("msg5");
        } else {
          new S68();
        }
      } catch (IllegalStateException e) {
        new S24();
        switch (event) {
          case EV485:
            send("msg17");
            send("msg0");
            break;
        }
        switch (event) {
          case EV486:
            new S61();
            send("msg5");
            new S15();
            new S20();
            break;
        }
      } catch (TimeoutException e) {
        send("msg0");
        switch (event) {
          case EV487:
            send("msg3");
            send("msg3");
            send("msg3");
            new State();
            break;
          case EV488:
            send("msg7");
            send("msg10");
            break;
          case EV489:
            new S34();
            break;
        }
      }
      new S48();
    } finally {
      new S18();
      new S25();
      switch (event) {
        case EV490:
          new S16();
          break;
        case EV491:
          send("msg16");
          if (x8 > 0) {
            new Helper();
            new S34();
          }
          if (x4 > 0) {
            new S1();
            new S23();
          }
          break;
        case EV492:
          new S77();
          switch (event) {
            case EV493:
              log("note");
              new S87();
              break;
            case EV494:
              send("msg19");
              break;
          }
          break;
      }
      try {
        new S16();
        try {
          send("msg10");
        } catch (IllegalStateException e) {
          new S28();
          new S57();
        }
        new S10();
      } catch (IllegalStateException e) {
        new S61();
        if (x8 > 0) {
          log("note");
          new S28();
          new S38();
          log("note");
        }
      }
    }
    try {
      send("msg1");
      new S46();
      new S77();
    } catch (IOException e) {
      new S42();
      new S63();
      new S25();
    } catch (IllegalStateException e) {
      new S54();
      log("note");
      send("msg11");
    }
  }
  void pause() {
    new S15();
    new S83();
    new S48();
    send("msg3");
  }
}
